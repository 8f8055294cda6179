#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbsmooth {

// Families of simply connected compact symmetric spaces of rank one.
enum class Family { AI, AII, AIII, BII, CII, FII };

enum class RootKind { A1, BC1 };

std::string_view to_string(Family f);
std::string_view to_string(RootKind k);

// Accepts the family tag case-insensitively ("aiii", "AIII").
std::optional<Family> parse_family(std::string_view tag);

// True for AIII, BII and CII.
bool takes_parameter(Family f);

// Smallest admissible q for parametrised families.
int min_parameter(Family f);

struct SpaceFamily {
    Family family = Family::AI;
    std::optional<int> q;  // set exactly when takes_parameter(family)
};

struct SymmetricSpace {
    SpaceFamily family;
    int m_alpha = 1;
    int m_2alpha = 0;
    RootKind root_kind = RootKind::A1;
    int dim_gk = 2;
    std::string name;

    // Multiplicities seen from the larger restricted root beta.
    int m_half_beta() const { return root_kind == RootKind::A1 ? 0 : m_alpha; }
    int m_beta() const { return root_kind == RootKind::A1 ? m_alpha : m_2alpha; }

    // Short tag such as "AIII(2)" or "FII".
    std::string tag() const;
};

bool operator==(const SpaceFamily& lhs, const SpaceFamily& rhs);
bool operator==(const SymmetricSpace& lhs, const SymmetricSpace& rhs);

struct JacobiParams {
    double a = 0.0;
    double b = 0.0;
};

// Jacobi exponents stored as twice their value, so that the half-integer
// parameters of the catalog stay exact.
struct DoubledJacobiParams {
    int two_a = 0;
    int two_b = 0;
};

// Throws std::invalid_argument when q is missing, superfluous or out of
// range. BII with q = 2 is rejected as a duplicate of SU(2)/SO(2).
SymmetricSpace make_space(SpaceFamily family);
SymmetricSpace make_space(Family family, std::optional<int> q = std::nullopt);

JacobiParams jacobi_params(const SymmetricSpace& space);
DoubledJacobiParams doubled_jacobi_params(const SymmetricSpace& space);

// All spaces with parameter up to max_q, in table order and ascending q.
// Throws std::invalid_argument for max_q < 3.
std::vector<SymmetricSpace> list_catalog(int max_q);

// Period of the radial coordinate t: 2*pi for A1 spaces, pi for BC1.
double radial_period(const SymmetricSpace& space);

// beta(Z) / alpha(Z): 1 for A1 spaces, 2 for BC1.
int beta_multiplier(const SymmetricSpace& space);

}  // namespace orbsmooth
