#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace orbsmooth {

// Exact angle num/den * pi, kept in lowest terms with den > 0.
struct PiMultiple {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static PiMultiple make(std::int64_t num, std::int64_t den);
    double radians() const;
    PiMultiple scaled(std::int64_t k) const { return make(num * k, den); }
    bool is_integer() const { return den == 1; }
};

bool operator==(const PiMultiple& lhs, const PiMultiple& rhs);

// Canonical radial coordinate t = alpha(Z). Points given as exact rational
// multiples of pi carry that form along, so lattice tests and endpoint
// evaluations stay exact.
struct RadialPoint {
    double t = 0.0;
    std::optional<PiMultiple> exact;

    static RadialPoint radians(double t) { return {t, std::nullopt}; }
    static RadialPoint pi_multiple(std::int64_t num, std::int64_t den);

    // cos(k t) and sin(k t); exact at rational multiples of pi where the
    // result is one of 0, +-1.
    double cos_multiple(int k) const;
    double sin_multiple(int k) const;

    std::string to_string() const;
};

// Accepts decimal radians ("0.7", "-1e-3") or "p/qpi", "ppi", "pi",
// "-1/2pi". Throws std::invalid_argument on anything else.
RadialPoint parse_radial_point(std::string_view text);

}  // namespace orbsmooth
