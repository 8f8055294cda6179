#include "orbsmooth/jacobi.hpp"

#include "mpfr_scalar.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace orbsmooth {

namespace {

void check_params(long n, JacobiParams p) {
    if (n < 0) throw std::invalid_argument("Jacobi degree must be non-negative");
    if (!(p.a >= 0.0) || !(p.b >= -0.5))
        throw std::invalid_argument("Jacobi parameters require a >= 0 and b >= -1/2");
}

double checked_argument(double x) {
    if (!(std::abs(x) <= 1.0 + kJacobiDomainSlack))
        throw std::domain_error("Jacobi argument " + std::to_string(x) + " outside [-1, 1]");
    return std::clamp(x, -1.0, 1.0);
}

// Gamma(z) / Gamma(z + delta), with delta = 0 short-circuited.
double gamma_ratio(double z, double delta) {
    if (delta == 0.0) return 1.0;
    return boost::math::tgamma_delta_ratio(z, delta);
}

// Three-term recurrence for P_n, n >= 2:
//   c1 P_n = c2(x) P_{n-1} - c3 P_{n-2}
struct RecurrenceCoefficients {
    double c1, c2, c3;
};

RecurrenceCoefficients raw_coefficients(long n, JacobiParams p, double x) {
    const double a = p.a, b = p.b;
    const double nn = static_cast<double>(n);
    const double s = 2.0 * nn + a + b;
    return {2.0 * nn * (nn + a + b) * (s - 2.0),
            (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b),
            2.0 * (nn + a - 1.0) * (nn + b - 1.0) * s};
}

// The same recurrence for R_n = P_n / binom(n+a, n), obtained by dividing
// through by the binomial ratios n/(n+a) and n(n-1)/((n+a)(n+a-1)).
RecurrenceCoefficients normalized_coefficients(long n, JacobiParams p, double x) {
    const double a = p.a, b = p.b;
    const double nn = static_cast<double>(n);
    const double s = 2.0 * nn + a + b;
    return {2.0 * (nn + a) * (nn + a + b) * (s - 2.0),
            (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b),
            2.0 * (nn - 1.0) * (nn + b - 1.0) * s};
}

double raw_first(JacobiParams p, double x) { return (p.a + 1.0) + 0.5 * (p.a + p.b + 2.0) * (x - 1.0); }

double normalized_first(JacobiParams p, double x) {
    return 1.0 + (p.a + p.b + 2.0) * (x - 1.0) / (2.0 * (p.a + 1.0));
}

// P_n(-1) / P_n(1) = (-1)^n Gamma(n+b+1) Gamma(a+1) / (Gamma(b+1) Gamma(n+a+1)).
double normalized_at_minus_one(long n, JacobiParams p) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    if (p.a == p.b) return sign;
    const double d = p.a - p.b;
    return sign * gamma_ratio(static_cast<double>(n) + p.b + 1.0, d) / gamma_ratio(p.b + 1.0, d);
}

int endpoint_of(double x) {
    if (x == 1.0) return 1;
    if (x == -1.0) return -1;
    return 0;
}

// Highest power-of-two exponent reached by |term_k| in a terminating 2F1
// sum, used to size the MPFR mantissa.
double max_log2_term(double upper1, double upper2, double lower, double z, long terms) {
    double log2_term = 0.0;
    double worst = 0.0;
    const double log2_z = z > 0.0 ? std::log2(z) : -1e300;
    for (long k = 0; k < terms; ++k) {
        const double kk = static_cast<double>(k);
        const double num = std::abs((upper1 + kk) * (upper2 + kk));
        if (num == 0.0) break;
        log2_term += std::log2(num) - std::log2(std::abs((lower + kk) * (kk + 1.0))) + log2_z;
        worst = std::max(worst, log2_term);
    }
    return worst;
}

// Terminating sum  sum_{k=0}^{n} (-n)_k (upper)_k / ((lower)_k k!) z^k  in MPFR.
// The parameters are half-integers or integers, hence exact as doubles.
void terminating_2f1(detail::MpfrScalar& out, long n, double upper, double lower,
                     const detail::MpfrScalar& z, mpfr_prec_t bits) {
    detail::MpfrScalar term(bits, 1.0), factor(bits), tmp(bits);
    mpfr_set_ui(out.get(), 1, MPFR_RNDN);
    for (long k = 0; k < n; ++k) {
        const double kk = static_cast<double>(k);
        // term *= (-n + k)(upper + k) / ((lower + k)(k + 1)) * z
        mpfr_set_d(factor.get(), -static_cast<double>(n) + kk, MPFR_RNDN);
        mpfr_set_d(tmp.get(), upper + kk, MPFR_RNDN);
        mpfr_mul(factor.get(), factor.get(), tmp.get(), MPFR_RNDN);
        mpfr_set_d(tmp.get(), lower + kk, MPFR_RNDN);
        mpfr_div(factor.get(), factor.get(), tmp.get(), MPFR_RNDN);
        mpfr_div_d(factor.get(), factor.get(), kk + 1.0, MPFR_RNDN);
        mpfr_mul(factor.get(), factor.get(), z.get(), MPFR_RNDN);
        mpfr_mul(term.get(), term.get(), factor.get(), MPFR_RNDN);
        mpfr_add(out.get(), out.get(), term.get(), MPFR_RNDN);
    }
}

mpfr_prec_t oracle_bits(double worst_log2) {
    return static_cast<mpfr_prec_t>(128 + std::ceil(std::max(0.0, worst_log2)));
}

void check_oracle_degree(long n) {
    if (n > kHypergeometricMaxDegree)
        throw std::out_of_range("hypergeometric oracle limited to n <= " +
                                std::to_string(kHypergeometricMaxDegree));
}

// sin^2(beta(Z)/2) with beta(Z) = k t, exact at rational multiples of pi.
double half_angle_sine_squared(const RadialPoint& point, int k) {
    double s;
    if (point.exact) {
        const PiMultiple half = PiMultiple::make(point.exact->num * k, point.exact->den * 2);
        s = RadialPoint{half.radians(), half}.sin_multiple(1);
    } else {
        s = std::sin(0.5 * k * point.t);
    }
    return s * s;
}

}  // namespace

namespace detail {

double jacobi_upward(long n, JacobiParams params, double x) {
    check_params(n, params);
    x = checked_argument(x);
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = raw_first(params, x);
    for (long k = 2; k <= n; ++k) {
        const auto c = raw_coefficients(k, params, x);
        const double next = (c.c2 * cur - c.c3 * prev) / c.c1;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace detail

double jacobi_endpoint_value(long n, JacobiParams params, int sign) {
    check_params(n, params);
    const double nn = static_cast<double>(n);
    if (sign > 0) return 1.0 / (std::tgamma(params.a + 1.0) * gamma_ratio(nn + 1.0, params.a));
    const double value = 1.0 / (std::tgamma(params.b + 1.0) * gamma_ratio(nn + 1.0, params.b));
    return n % 2 == 0 ? value : -value;
}

double jacobi_recurrence(long n, JacobiParams params, double x) {
    check_params(n, params);
    x = checked_argument(x);
    if (const int e = endpoint_of(x); e != 0) return jacobi_endpoint_value(n, params, e);
    return detail::jacobi_upward(n, params, x);
}

double jacobi_via_2f1(long n, JacobiParams params, double x) {
    check_params(n, params);
    check_oracle_degree(n);
    x = checked_argument(x);
    const double upper = static_cast<double>(n) + params.a + params.b + 1.0;
    const double lower = params.a + 1.0;

    // (1 - x)/2 is formed in MPFR so that the argument stays exact.
    const mpfr_prec_t bits =
        oracle_bits(max_log2_term(-static_cast<double>(n), upper, lower, 0.5 * (1.0 - x), n) + 64.0);
    detail::MpfrScalar z(bits, x), sum(bits), binom(bits, 1.0);
    mpfr_ui_sub(z.get(), 1, z.get(), MPFR_RNDN);
    mpfr_div_ui(z.get(), z.get(), 2, MPFR_RNDN);
    terminating_2f1(sum, n, upper, lower, z, bits);

    // binom(n + a, n) = prod_{j=1}^{n} (a + j) / j
    for (long j = 1; j <= n; ++j) {
        mpfr_mul_d(binom.get(), binom.get(), params.a + static_cast<double>(j), MPFR_RNDN);
        mpfr_div_d(binom.get(), binom.get(), static_cast<double>(j), MPFR_RNDN);
    }
    mpfr_mul(sum.get(), sum.get(), binom.get(), MPFR_RNDN);
    return sum.to_double();
}

AsymptoticApprox jacobi_asymptotic(long n, JacobiParams params, double theta) {
    check_params(n, params);
    if (n < 1) throw std::invalid_argument("jacobi_asymptotic requires n >= 1");
    if (!(theta >= kAsymptoticEndpointGuard && theta <= std::numbers::pi - kAsymptoticEndpointGuard))
        throw std::domain_error("jacobi_asymptotic: theta must lie inside (0, pi) away from the endpoints");
    const double a = params.a, b = params.b;
    AsymptoticApprox out;
    out.N = static_cast<double>(n) + 0.5 * (a + b + 1.0);
    out.gamma = -0.5 * std::numbers::pi * (a + 0.5);
    out.k_theta = std::pow(std::numbers::pi, -0.5) * std::pow(std::sin(0.5 * theta), -a - 0.5) *
                  std::pow(std::cos(0.5 * theta), -b - 0.5);
    out.envelope = out.k_theta / std::sqrt(static_cast<double>(n));
    out.value = out.envelope * std::cos(out.N * theta + out.gamma);
    return out;
}

double spherical_prefactor_log(long n, double a) {
    if (a == 0.0 || n == 0) return 0.0;
    const double nn = static_cast<double>(n);
    const double r = gamma_ratio(nn + 1.0, a);
    if (std::isnormal(r)) return std::lgamma(a + 1.0) + std::log(r);
    return std::lgamma(nn + 1.0) + std::lgamma(a + 1.0) - std::lgamma(nn + a + 1.0);
}

double spherical_function_at(JacobiParams params, long n, double x) {
    check_params(n, params);
    x = checked_argument(x);
    if (x == 1.0) return 1.0;
    if (x == -1.0) return normalized_at_minus_one(n, params);
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = normalized_first(params, x);
    for (long k = 2; k <= n; ++k) {
        const auto c = normalized_coefficients(k, params, x);
        const double next = (c.c2 * cur - c.c3 * prev) / c.c1;
        prev = cur;
        cur = next;
    }
    return cur;
}

SphericalValue spherical_function(const SymmetricSpace& space, long n, const RadialPoint& point) {
    const JacobiParams p = jacobi_params(space);
    const double x = point.cos_multiple(beta_multiplier(space));
    return {n, spherical_function_at(p, n, x), spherical_prefactor_log(n, p.a)};
}

double spherical_function_hypergeometric(const SymmetricSpace& space, long n,
                                         const RadialPoint& point) {
    if (n < 0) throw std::invalid_argument("degree must be non-negative");
    check_oracle_degree(n);
    const double m_half = space.m_half_beta();
    const double m_full = space.m_beta();
    const double upper = 0.5 * m_half + m_full + static_cast<double>(n);
    const double lower = 0.5 * (m_half + m_full + 1.0);
    const double z = half_angle_sine_squared(point, beta_multiplier(space));

    const mpfr_prec_t bits = oracle_bits(max_log2_term(-static_cast<double>(n), upper, lower, z, n) + 64.0);
    detail::MpfrScalar sum(bits), zz(bits, z);
    terminating_2f1(sum, n, upper, lower, zz, bits);
    return sum.to_double();
}

JacobiSequence::JacobiSequence(JacobiParams params, double x, Scaling scaling)
    : p_(params), x_(checked_argument(x)), scaling_(scaling), endpoint_(endpoint_of(x_)) {
    check_params(0, params);
    current_ = 1.0;
}

double JacobiSequence::endpoint_value(long n) const {
    if (scaling_ == Scaling::Raw) return jacobi_endpoint_value(n, p_, endpoint_);
    return endpoint_ > 0 ? 1.0 : normalized_at_minus_one(n, p_);
}

void JacobiSequence::advance() {
    const long next_n = n_ + 1;
    double next;
    if (endpoint_ != 0) {
        next = endpoint_value(next_n);
    } else if (next_n == 1) {
        next = scaling_ == Scaling::Raw ? raw_first(p_, x_) : normalized_first(p_, x_);
    } else {
        const auto c = scaling_ == Scaling::Raw ? raw_coefficients(next_n, p_, x_)
                                                : normalized_coefficients(next_n, p_, x_);
        next = (c.c2 * current_ - c.c3 * previous_) / c.c1;
    }
    previous_ = current_;
    current_ = next;
    n_ = next_n;
}

JacobiSequence spherical_sequence(const SymmetricSpace& space, const RadialPoint& point) {
    return JacobiSequence(jacobi_params(space), point.cos_multiple(beta_multiplier(space)),
                          JacobiSequence::Scaling::Normalized);
}

}  // namespace orbsmooth
