#pragma once

#include "orbsmooth/fitting.hpp"
#include "orbsmooth/space_catalog.hpp"

namespace orbsmooth {

struct DimensionValue {
    long n = 0;
    double dim = 1.0;
    double log_dim = 0.0;
    int growth_order = 0;  // m_alpha + m_2alpha
};

// Dimension of the spherical representation pi_n,
//
//   dim V = (2n+a+b+1) Gamma(b+1) Gamma(n+a+b+1) Gamma(n+a+1)
//           / (Gamma(a+b+2) Gamma(a+1) Gamma(n+b+1) Gamma(n+1)),
//
// the reciprocal of the Haar L2 norm of phi_{pi_n} by Schur orthogonality.
// Gamma ratios come from tgamma_delta_ratio, so the value keeps full
// relative precision up to n ~ 10^7; log_dim stays finite when dim overflows.
DimensionValue dim_spherical(const SymmetricSpace& space, long n);
double dim_spherical_value(JacobiParams params, long n);

// dim V_{pi_n} with the n-independent constant hoisted, for long series.
class SphericalDimension {
public:
    explicit SphericalDimension(JacobiParams params);
    double operator()(long n) const;
    double log_value(long n) const;

private:
    JacobiParams p_;
    double constant_;
    double log_constant_;
};

// 2n + 64 nodes, doubled when a or b is a half-integer.
int default_quadrature_nodes(const SymmetricSpace& space, long n);

// Largest degree accepted by the quadrature oracle.
inline constexpr long kQuadratureMaxDegree = 50;

// Reciprocal of the integral of phi_{pi_n}^2 against the normalised radial
// density, computed by Gauss-Legendre quadrature in theta = beta(Z) over
// [0, pi]. The density normalisation is the closed-form Beta integral.
// Throws std::invalid_argument if node_count < 2n + 64 or n is out of range.
double dim_by_quadrature(const SymmetricSpace& space, long n, int node_count);

// Least-squares slope of log dim against log N, N = n + (a+b+1)/2, over
// log-spaced n in [n_lo, n_hi]. Requires n_hi >= 10 n_lo.
//
// The shifted index is the natural variable here: dim is (up to a constant)
// 2N times Gamma ratios whose expansions in N carry only even powers, so the
// slope in log N converges like N^-2 instead of n^-1.
LineFit fit_growth_order(const SymmetricSpace& space, long n_lo, long n_hi, int samples = 64);

}  // namespace orbsmooth
