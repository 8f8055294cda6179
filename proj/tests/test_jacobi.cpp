#include "orbsmooth/jacobi.hpp"
#include "orbsmooth/jacobi_exact.hpp"

#include <boost/math/special_functions/legendre.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace orbsmooth;

namespace {

constexpr double kPi = std::numbers::pi;

// (c+1)_k / k! for rational c: binomial coefficient binom(c + k, k).
Rational rising_over_factorial(const Rational& c, long k) {
    Rational r = 1;
    for (long j = 1; j <= k; ++j) r *= (c + j) / Rational(j);
    return r;
}

// Independent oracle: the two-sided binomial sum
//   P_n(x) = sum_s binom(n+a, n-s) binom(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s}.
// binom(n+a, n-s) = binom(a+s + (n-s), n-s), binom(n+b, s) = binom(b+n-s + s, s).
Rational jacobi_binomial_sum(long n, const Rational& a, const Rational& b, const Rational& x) {
    Rational sum = 0;
    const Rational lo = (x - 1) / 2, hi = (x + 1) / 2;
    for (long s = 0; s <= n; ++s) {
        Rational term = rising_over_factorial(a + s, n - s) * rising_over_factorial(b + (n - s), s);
        for (long i = 0; i < s; ++i) term *= lo;
        for (long i = 0; i < n - s; ++i) term *= hi;
        sum += term;
    }
    return sum;
}

double rel(double v, double ref) { return std::abs(v - ref) / std::max(std::abs(ref), 1e-300); }

const JacobiParams kParamGrid[] = {{0, 0}, {1, 0}, {0.5, 0.5}, {1.5, 1.5}, {3, 1}, {7, 3}, {11, 1}, {2, 2}};

}  // namespace

TEST_CASE("recurrence examples") {
    CHECK(jacobi_recurrence(0, {2.5, 1}, 0.3) == 1.0);
    CHECK(jacobi_recurrence(3, {1, 0}, 1.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(jacobi_recurrence(5, {0, 0}, -1.0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(jacobi_via_2f1(0, {3, 1}, 0.2) == 1.0);
    CHECK(jacobi_via_2f1(1, {0, 0}, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(rel(jacobi_via_2f1(25, {1.5, 1.5}, 0.3), jacobi_recurrence(25, {1.5, 1.5}, 0.3)) < 1e-10);
}

TEST_CASE("exact rational examples") {
    const RationalJacobiParams legendre{0, 0};
    CHECK(jacobi_exact(2, legendre, 0) == Rational(-1, 2));
    CHECK(jacobi_exact(1, {1, 0}, 1) == 2);
    CHECK(jacobi_exact(4, legendre, 1) == 1);
    CHECK(rational_binomial(3, Rational(1, 2)) == Rational(35, 16));
    CHECK_THROWS_AS(jacobi_exact(kExactMaxDegree + 1, legendre, 0), std::out_of_range);
}

TEST_CASE("exact evaluation equals the two-sided binomial sum") {
    const Rational params[][2] = {{0, 0}, {1, 0}, {Rational(1, 2), Rational(1, 2)}, {Rational(3, 2), Rational(3, 2)},
                                  {7, 3},  {5, 1}, {Rational(5, 2), Rational(5, 2)}};
    const Rational xs[] = {-1, Rational(-1, 2), 0, Rational(1, 3), Rational(5, 7), 1};
    for (const auto& ab : params)
        for (long n = 0; n <= kExactMaxDegree; ++n)
            for (const Rational& x : xs) {
                CAPTURE(n);
                CHECK(jacobi_exact(n, {ab[0], ab[1]}, x) == jacobi_binomial_sum(n, ab[0], ab[1], x));
            }
}

TEST_CASE("Legendre case matches boost") {
    for (int n : {0, 1, 2, 7, 40, 200, 1000})
        for (double x : {-0.9, -0.3, 0.0, 0.45, 0.99}) {
            CAPTURE(n);
            CAPTURE(x);
            const double ref = boost::math::legendre_p(n, x);
            CHECK(std::abs(jacobi_recurrence(n, {0, 0}, x) - ref) <= 1e-12);
        }
}

TEST_CASE("recurrence and hypergeometric routes agree on random arguments") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> ux(-1.0, 1.0);
    for (const auto& p : kParamGrid)
        for (int trial = 0; trial < 40; ++trial) {
            const double x = ux(rng);
            const long n = 1 + static_cast<long>(rng() % 60);
            const double r = jacobi_recurrence(n, p, x);
            const double h = jacobi_via_2f1(n, p, x);
            // Relative to the sup norm on [-1, 1] so that values near a zero stay meaningful.
            const double scale = std::max(jacobi_endpoint_value(n, p, 1), std::abs(jacobi_endpoint_value(n, p, -1)));
            CHECK(std::abs(r - h) <= 1e-12 * scale);
        }
}

TEST_CASE("endpoint closed forms") {
    CHECK(jacobi_endpoint_value(3, {1, 0}, 1) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(jacobi_endpoint_value(4, {0.5, 0.5}, -1) == doctest::Approx(315.0 / 128.0).epsilon(1e-14));
    for (const auto& p : kParamGrid)
        for (long n : {1L, 5L, 30L, 200L}) {
            CHECK(rel(detail::jacobi_upward(n, p, 1.0), jacobi_endpoint_value(n, p, 1)) < 1e-12);
            CHECK(rel(detail::jacobi_upward(n, p, -1.0), jacobi_endpoint_value(n, p, -1)) < 1e-12);
        }
}

TEST_CASE("domain and range errors") {
    CHECK_THROWS_AS(jacobi_recurrence(3, {0, 0}, 1.1), std::domain_error);
    CHECK_NOTHROW(jacobi_recurrence(3, {0, 0}, 1.0 + 1e-13));
    CHECK_THROWS_AS(jacobi_recurrence(-1, {0, 0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_via_2f1(kHypergeometricMaxDegree + 1, {0, 0}, 0.0), std::out_of_range);
    CHECK_THROWS_AS(jacobi_asymptotic(10, {0, 0}, 0.0), std::domain_error);
    CHECK_THROWS_AS(jacobi_asymptotic(10, {0, 0}, kPi), std::domain_error);
    CHECK_THROWS_AS(jacobi_asymptotic(0, {0, 0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(spherical_function_hypergeometric(make_space(Family::AI), 201, RadialPoint::radians(1.0)),
                    std::out_of_range);
}

TEST_CASE("asymptotic components") {
    const AsymptoticApprox a = jacobi_asymptotic(100, {0, 0}, kPi / 2);
    CHECK(a.k_theta == doctest::Approx(std::sqrt(2.0 / kPi)).epsilon(1e-14));
    CHECK(a.gamma == doctest::Approx(-kPi / 4).epsilon(1e-15));
    CHECK(a.N == doctest::Approx(100.5));
    CHECK(a.envelope == doctest::Approx(std::sqrt(2.0 / kPi) / 10.0).epsilon(1e-14));
    const AsymptoticApprox b = jacobi_asymptotic(7, {7, 3}, 1.0);
    CHECK(b.N == doctest::Approx(7 + 5.5));
    CHECK(b.gamma == doctest::Approx(-kPi / 2 * 7.5));
    CHECK(b.k_theta > 0.0);
    // Error is O(n^{-3/2}) in the interior.
    for (long n : {1000L, 10000L}) {
        const double err = std::abs(jacobi_recurrence(n, {0, 0}, std::cos(1.0)) - jacobi_asymptotic(n, {0, 0}, 1.0).value);
        CHECK(err < 1.0 * std::pow(static_cast<double>(n), -1.5));
    }
}

TEST_CASE("spherical function examples") {
    const SymmetricSpace ai = make_space(Family::AI);
    for (const auto& s : list_catalog(4)) {
        CHECK(spherical_function(s, 0, RadialPoint::radians(0.37)).value == 1.0);
        CHECK(spherical_function(s, 17, RadialPoint::radians(0.0)).value == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(spherical_function_hypergeometric(s, 0, RadialPoint::radians(1.1)) == 1.0);
    }
    CHECK(spherical_function(ai, 1, RadialPoint::pi_multiple(1, 2)).value == 0.0);
    CHECK(std::abs(spherical_function_hypergeometric(ai, 2, RadialPoint::radians(1.0)) -
                   spherical_function(ai, 2, RadialPoint::radians(1.0)).value) <= 1e-12);
    const SymmetricSpace fii = make_space(Family::FII);
    CHECK(rel(spherical_function_hypergeometric(fii, 10, RadialPoint::radians(0.7)),
              spherical_function(fii, 10, RadialPoint::radians(0.7)).value) < 1e-10);
}

TEST_CASE("closed forms of specific spaces") {
    // SU(2)/SO(2): Legendre polynomials in cos t.
    const SymmetricSpace ai = make_space(Family::AI);
    for (int n : {3, 50, 4000})
        for (double t : {0.2, 1.0, 2.9})
            CHECK(std::abs(spherical_function(ai, n, RadialPoint::radians(t)).value -
                           boost::math::legendre_p(n, std::cos(t))) < 1e-12);
    // SO(4)/SO(3): sin((n+1)t) / ((n+1) sin t).
    const SymmetricSpace s3 = make_space(Family::BII, 3);
    for (int n : {1, 9, 500, 10000})
        for (double t : {0.3, 1.3, 2.5}) {
            const double ref = std::sin((n + 1) * t) / ((n + 1) * std::sin(t));
            CHECK(std::abs(spherical_function(s3, n, RadialPoint::radians(t)).value - ref) < 1e-11);
        }
    // SU(3)/S(U(2)xU(1)) at t = pi/2: beta = pi, phi = (-1)^n binom(n, n) / binom(n+1, n).
    const SymmetricSpace aiii = make_space(Family::AIII, 2);
    for (int n : {1, 6, 1000})
        CHECK(spherical_function(aiii, n, RadialPoint::pi_multiple(1, 2)).value ==
              doctest::Approx((n % 2 ? -1.0 : 1.0) / (n + 1)).epsilon(1e-14));
}

TEST_CASE("prefactor times P_n(1) telescopes") {
    for (double a : {0.0, 1.0, 1.5, 7.0, 11.0})
        for (long n : {1L, 10L, 1000L, 1000000L}) {
            const double v = std::exp(spherical_prefactor_log(n, a)) * jacobi_endpoint_value(n, {a, 0}, 1);
            CHECK(std::abs(v - 1.0) < 1e-12);
        }
    // Small-n exact product for integer a.
    for (long n = 1; n <= 30; ++n) {
        double binom = 1.0;
        for (long j = 1; j <= n; ++j) binom *= (3.0 + j) / j;
        CHECK(spherical_prefactor_log(n, 3.0) == doctest::Approx(-std::log(binom)).epsilon(1e-13));
    }
}

TEST_CASE("bound |phi| <= 1 on a dense grid") {
    for (const auto& s : list_catalog(4)) {
        if (s.family.q && *s.family.q > 4) continue;
        double worst = 0.0;
        for (int k = 0; k <= 200; ++k) {
            const RadialPoint t = RadialPoint::radians(k * radial_period(s) / 400.0);
            JacobiSequence seq = spherical_sequence(s, t);
            for (long n = 0; n <= 10000; ++n, seq.advance()) worst = std::max(worst, std::abs(seq.value()));
        }
        CAPTURE(s.tag());
        CHECK(worst <= 1.0 + 1e-9);
    }
}

TEST_CASE("periodicity and evenness") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ut(0.05, 3.0);
    for (const auto& s : list_catalog(4)) {
        const double period = radial_period(s);
        for (int trial = 0; trial < 10; ++trial) {
            const double t = ut(rng);
            const long n = 1 + static_cast<long>(rng() % 300);
            const double v = spherical_function(s, n, RadialPoint::radians(t)).value;
            CHECK(spherical_function(s, n, RadialPoint::radians(-t)).value == v);
            CHECK(std::abs(spherical_function(s, n, RadialPoint::radians(t + period)).value - v) < 1e-11);
        }
        // Exact lattice points are periodic exactly.
        for (long n : {3L, 8L}) {
            const RadialPoint p = RadialPoint::pi_multiple(1, 3);
            const RadialPoint shifted = RadialPoint::pi_multiple(s.root_kind == RootKind::A1 ? 7 : 4, 3);
            CHECK(spherical_function(s, n, shifted).value == spherical_function(s, n, p).value);
        }
    }
}

TEST_CASE("sequence matches pointwise evaluation") {
    const SymmetricSpace s = make_space(Family::CII, 2);
    const RadialPoint t = RadialPoint::radians(0.9);
    JacobiSequence seq = spherical_sequence(s, t);
    for (long n = 0; n <= 500; ++n, seq.advance()) {
        CHECK(seq.index() == n);
        CHECK(seq.value() == spherical_function(s, n, t).value);
    }
    JacobiSequence raw({1.5, 1.5}, 0.3, JacobiSequence::Scaling::Raw);
    for (long n = 0; n <= 50; ++n, raw.advance()) CHECK(raw.value() == jacobi_recurrence(n, {1.5, 1.5}, 0.3));
}
