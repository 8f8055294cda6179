#include "orbsmooth/dimension.hpp"

#include "orbsmooth/jacobi.hpp"
#include "orbsmooth/quadrature.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbsmooth {

namespace {

double gamma_ratio(double z, double delta) {
    if (delta == 0.0) return 1.0;
    return boost::math::tgamma_delta_ratio(z, delta);
}

// log of Gamma(b+1) / (Gamma(a+b+2) Gamma(a+1))
double log_constant(JacobiParams p) {
    return std::lgamma(p.b + 1.0) - std::lgamma(p.a + p.b + 2.0) - std::lgamma(p.a + 1.0);
}

double constant(JacobiParams p) {
    const double direct = std::tgamma(p.b + 1.0) / (std::tgamma(p.a + p.b + 2.0) * std::tgamma(p.a + 1.0));
    return std::isnormal(direct) ? direct : std::exp(log_constant(p));
}

// log Gamma(z + delta) / Gamma(z)
double log_rising(double z, double delta) {
    if (delta == 0.0) return 0.0;
    const double r = gamma_ratio(z, delta);
    if (std::isnormal(r)) return -std::log(r);
    return std::lgamma(z + delta) - std::lgamma(z);
}

bool is_half_integer(double v) { return v != std::floor(v); }

}  // namespace

SphericalDimension::SphericalDimension(JacobiParams params)
    : p_(params), constant_(constant(params)), log_constant_(log_constant(params)) {}

double SphericalDimension::operator()(long n) const {
    if (n < 0) throw std::invalid_argument("dim_spherical: n must be non-negative");
    if (n == 0) return 1.0;
    const double nn = static_cast<double>(n);
    return (2.0 * nn + p_.a + p_.b + 1.0) * constant_ /
           (gamma_ratio(nn + p_.b + 1.0, p_.a) * gamma_ratio(nn + 1.0, p_.a));
}

double SphericalDimension::log_value(long n) const {
    const double d = (*this)(n);
    if (std::isnormal(d)) return std::log(d);
    const double nn = static_cast<double>(n);
    return std::log(2.0 * nn + p_.a + p_.b + 1.0) + log_constant_ + log_rising(nn + p_.b + 1.0, p_.a) +
           log_rising(nn + 1.0, p_.a);
}

double dim_spherical_value(JacobiParams p, long n) { return SphericalDimension(p)(n); }

DimensionValue dim_spherical(const SymmetricSpace& space, long n) {
    const SphericalDimension dim(jacobi_params(space));
    DimensionValue out;
    out.n = n;
    out.growth_order = space.m_alpha + space.m_2alpha;
    out.dim = dim(n);
    out.log_dim = dim.log_value(n);
    return out;
}

int default_quadrature_nodes(const SymmetricSpace& space, long n) {
    const JacobiParams p = jacobi_params(space);
    const int base = static_cast<int>(2 * n + 64);
    return (is_half_integer(p.a) || is_half_integer(p.b)) ? 2 * base : base;
}

double dim_by_quadrature(const SymmetricSpace& space, long n, int node_count) {
    if (n < 0 || n > kQuadratureMaxDegree)
        throw std::invalid_argument("dim_by_quadrature: n must lie in [0, " +
                                    std::to_string(kQuadratureMaxDegree) + "]");
    if (node_count < 2 * n + 64)
        throw std::invalid_argument("dim_by_quadrature: node_count must be >= 2n + 64");
    const JacobiParams p = jacobi_params(space);
    const QuadratureRule rule = gauss_legendre(node_count);

    // Nodes in theta = beta(Z) on [0, pi]. With x = cos theta the weighted
    // measure (1-x)^a (1+x)^b dx becomes 2^{a+b+1} sin^{2a+1}(theta/2)
    // cos^{2b+1}(theta/2) dtheta, which is smooth for half-integer a, b too.
    const double half_pi = 0.5 * std::numbers::pi;
    double integral = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double theta = half_pi * (rule.nodes[i] + 1.0);
        const double phi = spherical_function_at(p, n, std::cos(theta));
        const double weight = std::pow(std::sin(0.5 * theta), 2.0 * p.a + 1.0) *
                              std::pow(std::cos(0.5 * theta), 2.0 * p.b + 1.0);
        integral += rule.weights[i] * half_pi * weight * phi * phi;
    }
    // Beta integral of sin^{2a+1}(theta/2) cos^{2b+1}(theta/2) over [0, pi].
    const double mass = std::exp(std::lgamma(p.a + 1.0) + std::lgamma(p.b + 1.0) - std::lgamma(p.a + p.b + 2.0));
    return mass / integral;
}

LineFit fit_growth_order(const SymmetricSpace& space, long n_lo, long n_hi, int samples) {
    if (n_lo < 1 || n_hi < 10 * n_lo)
        throw std::invalid_argument("fit_growth_order: range must span at least one decade");
    const JacobiParams p = jacobi_params(space);
    const double shift = 0.5 * (p.a + p.b + 1.0);
    std::vector<double> x, y;
    for (long n : log_spaced_indices(n_lo, n_hi, samples)) {
        x.push_back(std::log(static_cast<double>(n) + shift));
        y.push_back(dim_spherical(space, n).log_dim);
    }
    return fit_line(x, y);
}

}  // namespace orbsmooth
