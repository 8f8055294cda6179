#include "orbsmooth/space_catalog.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace orbsmooth;

namespace {

struct Row {
    Family family;
    std::optional<int> q;
    int m_alpha;
    int m_2alpha;
    RootKind kind;
};

// Rows of the classification table, written out by hand.
const Row kRows[] = {
    {Family::AI, std::nullopt, 1, 0, RootKind::A1},    {Family::AII, std::nullopt, 4, 0, RootKind::A1},
    {Family::AIII, 2, 2, 1, RootKind::BC1},            {Family::AIII, 5, 8, 1, RootKind::BC1},
    {Family::BII, 3, 2, 0, RootKind::A1},              {Family::BII, 6, 5, 0, RootKind::A1},
    {Family::CII, 2, 4, 3, RootKind::BC1},             {Family::CII, 4, 12, 3, RootKind::BC1},
    {Family::FII, std::nullopt, 8, 7, RootKind::BC1},
};

}  // namespace

TEST_CASE("table rows") {
    for (const Row& r : kRows) {
        const SymmetricSpace s = make_space(r.family, r.q);
        CAPTURE(s.tag());
        CHECK(s.m_alpha == r.m_alpha);
        CHECK(s.m_2alpha == r.m_2alpha);
        CHECK(s.root_kind == r.kind);
        CHECK(s.dim_gk == r.m_alpha + r.m_2alpha + 1);
    }
}

TEST_CASE("display names follow the quotient notation") {
    CHECK(make_space(Family::AI).name == "SU(2)/SO(2)");
    CHECK(make_space(Family::AIII, 2).name == "SU(3)/S(U(2)×U(1))");
    CHECK(make_space(Family::BII, 4).name == "SO(5)/S(O(4)×O(1))");
    CHECK(make_space(Family::CII, 2).name == "Sp(6)/Sp(4)×Sp(2)");
    CHECK(make_space(Family::FII).name == "F4/SO(9)");
    CHECK(make_space(Family::CII, 3).tag() == "CII(3)");
    CHECK(make_space(Family::AII).tag() == "AII");
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_space(Family::BII, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_space(Family::AIII, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_space(Family::CII, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_space(Family::AIII), std::invalid_argument);
    CHECK_THROWS_AS(make_space(Family::FII, 3), std::invalid_argument);
    CHECK_THROWS_AS(list_catalog(2), std::invalid_argument);
    CHECK_NOTHROW(make_space(Family::BII, 3));
    CHECK_NOTHROW(make_space(Family::AIII, 1000));
}

TEST_CASE("list_catalog at max_q = 3") {
    const auto spaces = list_catalog(3);
    REQUIRE(spaces.size() == 8);
    const char* tags[] = {"AI", "AII", "AIII(2)", "AIII(3)", "BII(3)", "CII(2)", "CII(3)", "FII"};
    for (std::size_t i = 0; i < spaces.size(); ++i) CHECK(spaces[i].tag() == tags[i]);
    for (const auto& s : spaces) CHECK(s.tag() != "BII(2)");
}

TEST_CASE("catalog invariants up to q = 100") {
    const auto spaces = list_catalog(100);
    CHECK(spaces.size() == 3 + 99 + 98 + 99);
    int two_root_critical = 0;
    for (const auto& s : spaces) {
        CAPTURE(s.tag());
        CHECK(s.m_alpha >= 1 + s.m_2alpha);
        CHECK(s.dim_gk == s.m_alpha + s.m_2alpha + 1);
        CHECK((s.root_kind == RootKind::A1) == (s.m_2alpha == 0));
        const DoubledJacobiParams d = doubled_jacobi_params(s);
        CHECK(d.two_a + 1 == s.m_half_beta() + s.m_beta());
        CHECK(d.two_b + 1 == s.m_beta());
        const JacobiParams p = jacobi_params(s);
        CHECK(p.a == d.two_a / 2.0);
        CHECK(p.b == d.two_b / 2.0);
        if (s.root_kind == RootKind::BC1 && s.m_alpha - s.m_2alpha == 1) ++two_root_critical;
    }
    CHECK(two_root_critical == 3);
}

TEST_CASE("jacobi parameters of specific spaces") {
    auto ab = [](Family f, std::optional<int> q = std::nullopt) { return jacobi_params(make_space(f, q)); };
    CHECK(ab(Family::AI).a == 0.0);
    CHECK(ab(Family::AI).b == 0.0);
    CHECK(ab(Family::AII).a == 1.5);
    CHECK(ab(Family::AIII, 2).a == 1.0);
    CHECK(ab(Family::AIII, 2).b == 0.0);
    CHECK(ab(Family::BII, 3).a == 0.5);
    CHECK(ab(Family::CII, 2).a == 3.0);
    CHECK(ab(Family::CII, 2).b == 1.0);
    CHECK(ab(Family::FII).a == 7.0);
    CHECK(ab(Family::FII).b == 3.0);
}

TEST_CASE("period and beta multiplier") {
    CHECK(radial_period(make_space(Family::AI)) == doctest::Approx(2 * 3.141592653589793));
    CHECK(radial_period(make_space(Family::FII)) == doctest::Approx(3.141592653589793));
    CHECK(beta_multiplier(make_space(Family::BII, 4)) == 1);
    CHECK(beta_multiplier(make_space(Family::CII, 2)) == 2);
}

TEST_CASE("family parsing") {
    CHECK(parse_family("aiii") == Family::AIII);
    CHECK(parse_family("FII") == Family::FII);
    CHECK_FALSE(parse_family("DIII").has_value());
    CHECK_FALSE(parse_family("").has_value());
    CHECK(takes_parameter(Family::BII));
    CHECK_FALSE(takes_parameter(Family::AII));
    CHECK(min_parameter(Family::BII) == 3);
    CHECK(min_parameter(Family::CII) == 2);
}
