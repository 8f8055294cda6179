#pragma once

// Exact rational evaluation of Jacobi polynomials. Kept apart from
// jacobi.hpp so that only callers that want exact arithmetic pull in GMP.

#include "orbsmooth/space_catalog.hpp"

#include <gmpxx.h>

namespace orbsmooth {

using Rational = mpq_class;

inline constexpr long kExactMaxDegree = 20;

struct RationalJacobiParams {
    Rational a;
    Rational b;
};

RationalJacobiParams exact_jacobi_params(const SymmetricSpace& space);

// P_n^{(a,b)}(x) = binom(n+a, n) 2F1(-n, n+a+b+1; a+1; (1-x)/2), summed in
// rational arithmetic. Throws std::out_of_range for n > kExactMaxDegree and
// std::invalid_argument for n < 0 or a <= -1 (the 2F1 lower parameter must
// not hit a non-positive integer).
Rational jacobi_exact(long n, const RationalJacobiParams& params, const Rational& x);

// Generalised binomial binom(n + s, n) = (s+1)_n / n! for rational s.
Rational rational_binomial(long n, const Rational& s);

}  // namespace orbsmooth
