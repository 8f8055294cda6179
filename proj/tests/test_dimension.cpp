#include "orbsmooth/dimension.hpp"
#include "orbsmooth/jacobi_exact.hpp"

#include <boost/math/special_functions/binomial.hpp>
#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace orbsmooth;

namespace {

Rational pochhammer(const Rational& x, long n) {
    Rational r = 1;
    for (long j = 0; j < n; ++j) r *= x + j;
    return r;
}

// Exact dimension as a rational:
//   (2n+a+b+1)/(a+b+1) * (a+b+1)_n (a+1)_n / ((b+1)_n n!).
Rational exact_dimension(const SymmetricSpace& s, long n) {
    const RationalJacobiParams p = exact_jacobi_params(s);
    Rational factorial = 1;
    for (long j = 1; j <= n; ++j) factorial *= j;
    return (2 * n + p.a + p.b + 1) / (p.a + p.b + 1) * pochhammer(p.a + p.b + 1, n) * pochhammer(p.a + 1, n) /
           (pochhammer(p.b + 1, n) * factorial);
}

double binom(double n, double k) { return boost::math::binomial_coefficient<double>(static_cast<unsigned>(n), static_cast<unsigned>(k)); }

double rel(double v, double ref) { return std::abs(v - ref) / std::abs(ref); }

}  // namespace

TEST_CASE("examples") {
    const SymmetricSpace ai = make_space(Family::AI);
    CHECK(dim_spherical(ai, 7).dim == doctest::Approx(15.0).epsilon(1e-15));
    CHECK(dim_spherical(ai, 7).growth_order == 1);
    for (const auto& s : list_catalog(6)) CHECK(dim_spherical(s, 0).dim == 1.0);
    CHECK(dim_spherical(make_space(Family::AIII, 2), 3).dim == doctest::Approx(64.0).epsilon(1e-14));
    CHECK(dim_by_quadrature(ai, 5, 128) == doctest::Approx(11.0).epsilon(1e-8));
    const SymmetricSpace fii = make_space(Family::FII);
    CHECK(rel(dim_by_quadrature(fii, 4, 256), dim_spherical(fii, 4).dim) < 1e-8);
    for (const auto& s : list_catalog(5)) CHECK(std::abs(dim_by_quadrature(s, 0, 64) - 1.0) < 1e-12);
}

TEST_CASE("exact rational dimension is an integer and matches") {
    for (const auto& s : list_catalog(6))
        for (long n = 0; n <= 100; ++n) {
            const Rational d = exact_dimension(s, n);
            CAPTURE(s.tag());
            CAPTURE(n);
            CHECK(d.get_den() == 1);
            const double v = dim_spherical(s, n).dim;
            CHECK(rel(v, d.get_d()) < 1e-12);
            CHECK(std::abs(v - std::round(v)) <= 1e-6 * std::max(1.0, v) + 1e-6);
        }
}

TEST_CASE("known dimension formulas for spheres and projective spaces") {
    // SO(q+1)/SO(q): harmonic polynomials of degree n on S^q.
    for (int q = 3; q <= 8; ++q) {
        const SymmetricSpace s = make_space(Family::BII, q);
        for (long n = 0; n <= 60; ++n) {
            const double ref = binom(n + q, q) - (n >= 2 ? binom(n + q - 2, q) : 0.0);
            CHECK(rel(dim_spherical(s, n).dim, ref) < 1e-12);
        }
    }
    // SU(q+1)/S(U(q)xU(1)): (2n+q)/q * binom(n+q-1, n)^2.
    for (int q = 2; q <= 7; ++q) {
        const SymmetricSpace s = make_space(Family::AIII, q);
        for (long n = 0; n <= 60; ++n) {
            const double c = binom(n + q - 1, n);
            CHECK(rel(dim_spherical(s, n).dim, (2.0 * n + q) / q * c * c) < 1e-12);
        }
    }
    // SU(3) weight (n, n) by the Weyl formula: (n+1)(n+1)(2n+2)/2.
    const SymmetricSpace aiii2 = make_space(Family::AIII, 2);
    for (long n = 0; n <= 100; ++n) {
        const double m = static_cast<double>(n + 1);
        CHECK(rel(dim_spherical(aiii2, n).dim, m * m * (2 * m) / 2) < 1e-12);
    }
}

TEST_CASE("AI anchor up to 10^6") {
    const SphericalDimension dim(jacobi_params(make_space(Family::AI)));
    for (long n = 0; n <= 1000000; n += 997) CHECK(dim(n) == 2.0 * n + 1.0);
}

TEST_CASE("monotone in n") {
    for (const auto& s : list_catalog(6)) {
        const SphericalDimension dim(jacobi_params(s));
        double prev = dim(0);
        bool increasing = true;
        for (long n = 1; n <= 10000; ++n) {
            const double d = dim(n);
            increasing = increasing && d > prev;
            prev = d;
        }
        CAPTURE(s.tag());
        CHECK(increasing);
    }
}

TEST_CASE("log value stays finite where dim overflows") {
    const SymmetricSpace cii = make_space(Family::CII, 40);  // growth order 159
    const DimensionValue v = dim_spherical(cii, 1000000);
    CHECK(std::isfinite(v.log_dim));
    CHECK(v.log_dim > 700.0);
    const DimensionValue w = dim_spherical(cii, 10);
    CHECK(v.log_dim > w.log_dim);
    CHECK(w.log_dim == doctest::Approx(std::log(w.dim)).epsilon(1e-14));
}

TEST_CASE("quadrature agrees with the closed form") {
    for (const auto& s : list_catalog(5))
        for (long n = 0; n <= 30; ++n) {
            CAPTURE(s.tag());
            CAPTURE(n);
            CHECK(rel(dim_by_quadrature(s, n, default_quadrature_nodes(s, n)), dim_spherical(s, n).dim) < 1e-8);
        }
    CHECK_THROWS_AS(dim_by_quadrature(make_space(Family::AI), 10, 50), std::invalid_argument);
    CHECK_THROWS_AS(dim_by_quadrature(make_space(Family::AI), 51, 400), std::invalid_argument);
    CHECK(default_quadrature_nodes(make_space(Family::AII), 3) == 2 * (6 + 64));
    CHECK(default_quadrature_nodes(make_space(Family::AI), 3) == 70);
}

TEST_CASE("growth order fits") {
    CHECK(fit_growth_order(make_space(Family::AI), 1000, 10000).slope == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::abs(fit_growth_order(make_space(Family::FII), 1000, 10000).slope - 15.0) <= 0.01);
    CHECK(std::abs(fit_growth_order(make_space(Family::AIII, 3), 1000, 10000).slope - 5.0) <= 0.01);
    for (const auto& s : list_catalog(6)) {
        const LineFit f = fit_growth_order(s, 1000, 10000);
        CAPTURE(s.tag());
        CHECK(std::abs(f.slope - (s.m_alpha + s.m_2alpha)) <= 0.01);
        CHECK(f.r_squared > 0.999999);
    }
    CHECK_THROWS_AS(fit_growth_order(make_space(Family::AI), 1000, 5000), std::invalid_argument);
}
