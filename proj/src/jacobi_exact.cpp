#include "orbsmooth/jacobi_exact.hpp"

#include <stdexcept>
#include <string>

namespace orbsmooth {

RationalJacobiParams exact_jacobi_params(const SymmetricSpace& space) {
    const auto d = doubled_jacobi_params(space);
    RationalJacobiParams p{Rational(d.two_a, 2), Rational(d.two_b, 2)};
    p.a.canonicalize();
    p.b.canonicalize();
    return p;
}

Rational rational_binomial(long n, const Rational& s) {
    if (n < 0) throw std::invalid_argument("binomial degree must be non-negative");
    Rational out(1);
    for (long j = 1; j <= n; ++j) out = out * (s + j) / j;
    return out;
}

Rational jacobi_exact(long n, const RationalJacobiParams& params, const Rational& x) {
    if (n < 0) throw std::invalid_argument("Jacobi degree must be non-negative");
    if (n > kExactMaxDegree)
        throw std::out_of_range("jacobi_exact limited to n <= " + std::to_string(kExactMaxDegree));
    if (params.a <= -1) throw std::invalid_argument("jacobi_exact requires a > -1");

    const Rational& a = params.a;
    const Rational& b = params.b;
    const Rational z = (Rational(1) - x) / 2;
    Rational term(1);
    Rational sum(1);
    for (long k = 0; k < n; ++k) {
        term = term * Rational(k - n) * (a + b + n + 1 + k) / ((a + 1 + k) * (k + 1)) * z;
        sum += term;
    }
    return sum * rational_binomial(n, a);
}

}  // namespace orbsmooth
