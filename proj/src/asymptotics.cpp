#include "orbsmooth/asymptotics.hpp"

#include "orbsmooth/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace orbsmooth {

namespace {

// Windows must hold a couple of oscillation periods (2 pi / theta in n).
long oscillation_width(double theta) {
    const double s = std::abs(std::sin(theta));
    if (s < 1e-12) return 1;
    return static_cast<long>(std::ceil(4.0 * std::numbers::pi / std::min(theta, 2.0 * std::numbers::pi - theta)));
}

void check_range(long n_lo, long n_hi) {
    if (n_lo < 1 || n_hi <= n_lo) throw std::invalid_argument("fit range must satisfy 1 <= n_lo < n_hi");
}

}  // namespace

DecayFit spherical_decay_fit(const SymmetricSpace& space, const RadialPoint& point, long n_lo, long n_hi) {
    check_range(n_lo, n_hi);
    const JacobiParams p = jacobi_params(space);
    const double shift = 0.5 * (p.a + p.b + 1.0);
    const double x = point.cos_multiple(beta_multiplier(space));
    const double theta = std::acos(std::clamp(x, -1.0, 1.0));

    JacobiSequence seq(p, x, JacobiSequence::Scaling::Normalized);
    std::vector<double> values(static_cast<std::size_t>(n_hi - n_lo + 1));
    while (seq.index() < n_lo) seq.advance();
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = seq.value();
        seq.advance();
    }

    const auto maxima = windowed_maxima(values, n_lo, n_lo, n_hi, kEnvelopeWindows, oscillation_width(theta));
    std::vector<double> xs, ys;
    for (const auto& m : maxima) {
        xs.push_back(static_cast<double>(m.index) + shift);
        ys.push_back(m.value);
    }
    DecayFit out;
    out.fit = fit_power_law(xs, ys);
    out.exponent = -out.fit.slope;

    // Lower-bound check: mean of |phi|^2 n^{m_alpha} over log-spaced windows.
    const auto edges = log_spaced_indices(n_lo, n_hi + 1, 11);
    std::vector<double> means;
    for (std::size_t w = 0; w + 1 < edges.size(); ++w) {
        double acc = 0.0;
        for (long n = edges[w]; n < edges[w + 1]; ++n) {
            const double v = values[static_cast<std::size_t>(n - n_lo)];
            acc += v * v * std::pow(static_cast<double>(n), space.m_alpha);
        }
        means.push_back(acc / static_cast<double>(edges[w + 1] - edges[w]));
    }
    out.lower_min = *std::min_element(means.begin(), means.end());
    out.lower_max = *std::max_element(means.begin(), means.end());
    out.lower_ratio = out.lower_max > 0.0 ? out.lower_min / out.lower_max : 0.0;
    return out;
}

LineFit asymptotic_residual_fit(JacobiParams params, double theta, long n_lo, long n_hi) {
    check_range(n_lo, n_hi);
    const double x = std::cos(theta);
    JacobiSequence seq(params, x, JacobiSequence::Scaling::Raw);
    std::vector<double> residual(static_cast<std::size_t>(n_hi - n_lo + 1));
    while (seq.index() < n_lo) seq.advance();
    for (std::size_t i = 0; i < residual.size(); ++i) {
        const long n = seq.index();
        residual[i] = seq.value() - jacobi_asymptotic(n, params, theta).value;
        seq.advance();
    }
    const auto maxima = windowed_maxima(residual, n_lo, n_lo, n_hi, kEnvelopeWindows, oscillation_width(theta));
    std::vector<double> xs, ys;
    for (const auto& m : maxima) {
        if (m.value <= 0.0) continue;
        xs.push_back(static_cast<double>(m.index));
        ys.push_back(m.value);
    }
    LineFit fit = fit_power_law(xs, ys);
    fit.slope = -fit.slope;
    return fit;
}

}  // namespace orbsmooth
