#include "orbsmooth/space_catalog.hpp"

#include <array>
#include <cctype>
#include <numbers>
#include <stdexcept>

namespace orbsmooth {

namespace {

constexpr std::array<Family, 6> kTableOrder = {Family::AI,  Family::AII, Family::AIII,
                                               Family::BII, Family::CII, Family::FII};

std::string quotient_name(Family f, int q) {
    const std::string qs = std::to_string(q);
    switch (f) {
    case Family::AI: return "SU(2)/SO(2)";
    case Family::AII: return "SU(4)/Sp(4)";
    case Family::AIII: return "SU(" + std::to_string(q + 1) + ")/S(U(" + qs + ")×U(1))";
    case Family::BII: return "SO(" + std::to_string(q + 1) + ")/S(O(" + qs + ")×O(1))";
    case Family::CII:
        return "Sp(" + std::to_string(2 * q + 2) + ")/Sp(" + std::to_string(2 * q) + ")×Sp(2)";
    case Family::FII: return "F4/SO(9)";
    }
    return {};
}

}  // namespace

std::string_view to_string(Family f) {
    switch (f) {
    case Family::AI: return "AI";
    case Family::AII: return "AII";
    case Family::AIII: return "AIII";
    case Family::BII: return "BII";
    case Family::CII: return "CII";
    case Family::FII: return "FII";
    }
    return "?";
}

std::string_view to_string(RootKind k) { return k == RootKind::A1 ? "A1" : "BC1"; }

std::optional<Family> parse_family(std::string_view tag) {
    std::string upper;
    for (char c : tag) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (Family f : kTableOrder)
        if (upper == to_string(f)) return f;
    return std::nullopt;
}

bool takes_parameter(Family f) {
    return f == Family::AIII || f == Family::BII || f == Family::CII;
}

int min_parameter(Family f) {
    switch (f) {
    case Family::AIII: return 2;
    case Family::BII: return 3;
    case Family::CII: return 2;
    default: return 0;
    }
}

std::string SymmetricSpace::tag() const {
    std::string out(to_string(family.family));
    if (family.q) out += "(" + std::to_string(*family.q) + ")";
    return out;
}

bool operator==(const SpaceFamily& lhs, const SpaceFamily& rhs) {
    return lhs.family == rhs.family && lhs.q == rhs.q;
}

bool operator==(const SymmetricSpace& lhs, const SymmetricSpace& rhs) {
    return lhs.family == rhs.family && lhs.m_alpha == rhs.m_alpha && lhs.m_2alpha == rhs.m_2alpha &&
           lhs.root_kind == rhs.root_kind && lhs.dim_gk == rhs.dim_gk && lhs.name == rhs.name;
}

SymmetricSpace make_space(SpaceFamily family) {
    const Family f = family.family;
    const std::string tag(to_string(f));
    if (!takes_parameter(f)) {
        if (family.q)
            throw std::invalid_argument("family " + tag + " takes no parameter q");
    } else {
        if (!family.q) throw std::invalid_argument("family " + tag + " requires a parameter q");
        const int q = *family.q;
        if (f == Family::BII && q == 2)
            throw std::invalid_argument("BII with q=2 is excluded: isomorphic to SU(2)/SO(2) (use AI)");
        if (q < min_parameter(f))
            throw std::invalid_argument("family " + tag + " requires q >= " +
                                        std::to_string(min_parameter(f)) + ", got " +
                                        std::to_string(q));
    }

    const int q = family.q.value_or(0);
    SymmetricSpace s;
    s.family = family;
    switch (f) {
    case Family::AI: s.m_alpha = 1; s.m_2alpha = 0; break;
    case Family::AII: s.m_alpha = 4; s.m_2alpha = 0; break;
    case Family::AIII: s.m_alpha = 2 * (q - 1); s.m_2alpha = 1; break;
    case Family::BII: s.m_alpha = q - 1; s.m_2alpha = 0; break;
    case Family::CII: s.m_alpha = 4 * (q - 1); s.m_2alpha = 3; break;
    case Family::FII: s.m_alpha = 8; s.m_2alpha = 7; break;
    }
    s.root_kind = s.m_2alpha == 0 ? RootKind::A1 : RootKind::BC1;
    s.dim_gk = s.m_alpha + s.m_2alpha + 1;
    s.name = quotient_name(f, q);
    return s;
}

SymmetricSpace make_space(Family family, std::optional<int> q) {
    return make_space(SpaceFamily{family, q});
}

DoubledJacobiParams doubled_jacobi_params(const SymmetricSpace& space) {
    return {space.m_half_beta() + space.m_beta() - 1, space.m_beta() - 1};
}

JacobiParams jacobi_params(const SymmetricSpace& space) {
    const auto d = doubled_jacobi_params(space);
    return {0.5 * d.two_a, 0.5 * d.two_b};
}

std::vector<SymmetricSpace> list_catalog(int max_q) {
    if (max_q < 3) throw std::invalid_argument("list_catalog: max_q must be >= 3");
    std::vector<SymmetricSpace> out;
    for (Family f : kTableOrder) {
        if (!takes_parameter(f)) {
            out.push_back(make_space(f));
            continue;
        }
        for (int q = min_parameter(f); q <= max_q; ++q) out.push_back(make_space(f, q));
    }
    return out;
}

double radial_period(const SymmetricSpace& space) {
    return space.root_kind == RootKind::A1 ? 2.0 * std::numbers::pi : std::numbers::pi;
}

int beta_multiplier(const SymmetricSpace& space) { return space.root_kind == RootKind::A1 ? 1 : 2; }

}  // namespace orbsmooth
