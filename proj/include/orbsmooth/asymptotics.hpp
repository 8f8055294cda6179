#pragma once

// Empirical fits of the large-n behaviour of Jacobi polynomials and
// spherical functions: decay envelopes and asymptotic residuals.

#include "orbsmooth/fitting.hpp"
#include "orbsmooth/radial_point.hpp"
#include "orbsmooth/space_catalog.hpp"

namespace orbsmooth {

inline constexpr int kEnvelopeWindows = 30;

struct DecayFit {
    double exponent = 0.0;  // s in |phi_n| ~ N^{-s}
    LineFit fit;
    // Window means of |phi_n|^2 n^{m_alpha}: bounded below iff the two-sided
    // estimate holds. ratio = min / max over the windows.
    double lower_min = 0.0;
    double lower_max = 0.0;
    double lower_ratio = 0.0;
};

// Fits the envelope of |phi_{pi_n}(t)| over n in [n_lo, n_hi] by window maxima
// against N = n + (a+b+1)/2.
DecayFit spherical_decay_fit(const SymmetricSpace& space, const RadialPoint& point, long n_lo, long n_hi);

// Exponent of the envelope of |P_n(cos theta) - asymptotic approximation|
// over n in [n_lo, n_hi]; the slope is negated so a residual O(n^{-3/2})
// reports about 1.5.
LineFit asymptotic_residual_fit(JacobiParams params, double theta, long n_lo, long n_hi);

}  // namespace orbsmooth
