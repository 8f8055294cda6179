#pragma once

#include "orbsmooth/radial_point.hpp"
#include "orbsmooth/space_catalog.hpp"

namespace orbsmooth {

// Tolerance for arguments slightly outside [-1, 1] from rounding in cos().
inline constexpr double kJacobiDomainSlack = 1e-12;

// Interior bound for the oscillatory asymptotic; k(theta) is singular at 0 and pi.
inline constexpr double kAsymptoticEndpointGuard = 1e-3;

// Largest degree accepted by the terminating hypergeometric oracles.
inline constexpr long kHypergeometricMaxDegree = 200;

// P_n^{(a,b)}(x) by upward three-term recurrence. At x = +-1 the closed
// binomial values are returned. Throws std::domain_error for x outside
// [-1, 1] by more than kJacobiDomainSlack and std::invalid_argument for
// n < 0 or parameters outside a >= 0, b >= -1/2.
double jacobi_recurrence(long n, JacobiParams params, double x);

// P_n^{(a,b)}(+1) = binom(n+a, n) and P_n^{(a,b)}(-1) = (-1)^n binom(n+b, n).
double jacobi_endpoint_value(long n, JacobiParams params, int sign);

// P_n^{(a,b)}(x) from the terminating 2F1(-n, n+a+b+1; a+1; (1-x)/2) sum
// times binom(n+a, n). The sum is carried in MPFR with enough bits to absorb
// the cancellation between alternating terms, so the result is accurate to
// double rounding. Throws std::out_of_range for n > kHypergeometricMaxDegree.
double jacobi_via_2f1(long n, JacobiParams params, double x);

struct AsymptoticApprox {
    double value = 0.0;     // k(theta) n^{-1/2} cos(N theta + gamma)
    double envelope = 0.0;  // k(theta) n^{-1/2}
    double N = 0.0;
    double gamma = 0.0;
    double k_theta = 0.0;
};

// Interior approximation of P_n^{(a,b)}(cos theta), error O(n^{-3/2}).
// Throws std::domain_error unless theta lies in
// [kAsymptoticEndpointGuard, pi - kAsymptoticEndpointGuard], and
// std::invalid_argument for n < 1.
AsymptoticApprox jacobi_asymptotic(long n, JacobiParams params, double theta);

struct SphericalValue {
    long n = 0;
    double value = 0.0;
    double prefactor_log = 0.0;  // log(Gamma(n+1) Gamma(a+1) / Gamma(a+n+1))
};

// log(Gamma(n+1) Gamma(a+1) / Gamma(a+n+1)), i.e. -log binom(n+a, n).
double spherical_prefactor_log(long n, double a);

// The spherical function phi_{pi_n} at exp(iZ), t = alpha(Z):
//   Gamma(n+1)Gamma(a+1)/Gamma(a+n+1) * P_n^{(a,b)}(cos beta(Z)).
//
// The product is evaluated as one normalized recurrence, R_n = P_n / P_n(1),
// which stays bounded by 1 for every n while P_n(1) itself grows like n^a.
SphericalValue spherical_function(const SymmetricSpace& space, long n, const RadialPoint& point);

// Same quantity with the argument given directly as x = cos beta(Z).
double spherical_function_at(JacobiParams params, long n, double x);

// Independent route through the hypergeometric form
//   2F1(m_{beta/2}/2 + m_beta + n, -n; (m_{beta/2} + m_beta + 1)/2; sin^2(beta(Z)/2)),
// built from the multiplicities alone and summed in MPFR.
// Throws std::out_of_range for n > kHypergeometricMaxDegree.
double spherical_function_hypergeometric(const SymmetricSpace& space, long n,
                                         const RadialPoint& point);

// Streams P_n^{(a,b)}(x) (raw) or P_n / P_n(1) (normalized) for n = 0, 1, 2, ...
// at a fixed x. One step costs O(1), so a whole series up to n = 10^7 is cheap.
class JacobiSequence {
public:
    enum class Scaling { Raw, Normalized };

    JacobiSequence(JacobiParams params, double x, Scaling scaling);

    long index() const { return n_; }
    double value() const { return current_; }
    void advance();

private:
    double endpoint_value(long n) const;

    JacobiParams p_;
    double x_;
    Scaling scaling_;
    int endpoint_ = 0;  // +1 / -1 when x sits exactly on an endpoint
    long n_ = 0;
    double previous_ = 0.0;
    double current_ = 1.0;
};

// Convenience: normalized sequence for a space and radial point.
JacobiSequence spherical_sequence(const SymmetricSpace& space, const RadialPoint& point);

namespace detail {
// Pure upward recurrence with no endpoint shortcut; used to check the
// closed endpoint forms against the recurrence itself.
double jacobi_upward(long n, JacobiParams params, double x);
}  // namespace detail

}  // namespace orbsmooth
