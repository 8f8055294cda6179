#include "orbsmooth/radial_point.hpp"

#include <boost/math/special_functions/cos_pi.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace orbsmooth {

PiMultiple PiMultiple::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("pi multiple with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

double PiMultiple::radians() const {
    return std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
}

bool operator==(const PiMultiple& lhs, const PiMultiple& rhs) {
    return lhs.num == rhs.num && lhs.den == rhs.den;
}

RadialPoint RadialPoint::pi_multiple(std::int64_t num, std::int64_t den) {
    const PiMultiple m = PiMultiple::make(num, den);
    return {m.radians(), m};
}

namespace {

// Reduce k*num/den modulo 2 so the argument handed to sin_pi/cos_pi is small.
double reduced_pi_argument(const PiMultiple& m, int k) {
    const std::int64_t period = 2 * m.den;
    std::int64_t r = (m.num * k) % period;
    if (r < 0) r += period;
    return static_cast<double>(r) / static_cast<double>(m.den);
}

}  // namespace

double RadialPoint::cos_multiple(int k) const {
    if (exact) return boost::math::cos_pi(reduced_pi_argument(*exact, k));
    return std::cos(k * t);
}

double RadialPoint::sin_multiple(int k) const {
    if (exact) return boost::math::sin_pi(reduced_pi_argument(*exact, k));
    return std::sin(k * t);
}

std::string RadialPoint::to_string() const {
    if (exact) {
        if (exact->den == 1) return std::to_string(exact->num) + "pi";
        return std::to_string(exact->num) + "/" + std::to_string(exact->den) + "pi";
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, t);
    return std::string(buf, res.ptr);
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++first;
    const auto res = std::from_chars(first, last, v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != last)
        throw std::invalid_argument("invalid angle '" + std::string(whole) + "'");
    return v;
}

}  // namespace

RadialPoint parse_radial_point(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty angle");
    if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
        std::string_view body = text.substr(0, text.size() - 2);
        if (body.empty() || body == "+") return RadialPoint::pi_multiple(1, 1);
        if (body == "-") return RadialPoint::pi_multiple(-1, 1);
        const auto slash = body.find('/');
        if (slash == std::string_view::npos) return RadialPoint::pi_multiple(parse_int(body, text), 1);
        const std::int64_t num = parse_int(body.substr(0, slash), text);
        const std::int64_t den = parse_int(body.substr(slash + 1), text);
        if (den == 0) throw std::invalid_argument("invalid angle '" + std::string(text) + "'");
        return RadialPoint::pi_multiple(num, den);
    }
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v))
        throw std::invalid_argument("invalid angle '" + std::string(text) + "'");
    return RadialPoint::radians(v);
}

}  // namespace orbsmooth
