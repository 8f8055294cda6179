#pragma once

#include "orbsmooth/radial_point.hpp"
#include "orbsmooth/space_catalog.hpp"

#include <stdexcept>
#include <string_view>
#include <vector>

namespace orbsmooth {

inline constexpr double kDefaultClassifyEps = 1e-9;
inline constexpr double kMaxClassifyEps = 1e-3;

enum class OrbitKind { Normalizer, Regular, ContinuousNonRegular };

std::string_view to_string(OrbitKind k);

struct OrbitClass {
    OrbitKind kind = OrbitKind::Regular;
    bool alpha_annihilated = false;
    bool two_alpha_annihilated = false;
    int coset_dim = 0;  // dim KzK

    bool continuous() const { return kind != OrbitKind::Normalizer; }
    bool regular() const { return kind == OrbitKind::Regular; }
};

// Which clause of the closed-form analysis produced the L2 verdict.
enum class CaseClause {
    SingularFactor,          // some point lies in the normaliser: not even L1
    CircleNeverL2,           // SU(2)/SO(2): continuous pairs are L1 but never L2
    CriticalOneRegular,      // m_alpha = m_2alpha + 1, at least one regular point: L2
    CriticalNoneRegular,     // m_alpha = m_2alpha + 1, neither regular: L1 only
    ContinuousPairL2,        // all other spaces: continuous pair is L2
    ContinuousTripleL2,      // any space: three continuous points give L2
};

std::string_view to_string(CaseClause c);

// Human-readable statement of the clause for reports.
std::string_view describe(CaseClause c);

struct DimensionRoute {
    std::vector<int> coset_dims;
    int dim_sum = 0;
    int dim_gk = 0;
    bool l1 = false;  // dim_sum >= dim_gk
    bool l2 = false;  // dim_sum >  dim_gk (pairs); unused for triples
};

struct SmoothnessVerdict {
    bool l1 = false;
    bool l2 = false;
    CaseClause case_fired = CaseClause::SingularFactor;
    bool case_l1 = false;
    bool case_l2 = false;
    DimensionRoute route_dimension;
    std::vector<OrbitClass> classes;
};

// Thrown when the case analysis and the dimension criterion disagree. The
// two are equivalent, so this signals a defect, never an input problem.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// alpha is annihilated iff t is within eps of pi*Z, 2alpha iff 2t is within
// eps of pi*Z (or alpha is). Exact pi-multiples are classified exactly.
// Throws std::invalid_argument for eps outside (0, kMaxClassifyEps].
OrbitClass classify_point(const SymmetricSpace& space, const RadialPoint& point,
                          double eps = kDefaultClassifyEps);

SmoothnessVerdict decide_pair(const SymmetricSpace& space, const RadialPoint& t1, const RadialPoint& t2,
                              double eps = kDefaultClassifyEps);

SmoothnessVerdict decide_triple(const SymmetricSpace& space, const RadialPoint& t1, const RadialPoint& t2,
                                const RadialPoint& t3, double eps = kDefaultClassifyEps);

// Every absolutely continuous pair product is automatically L2 iff
// m_alpha - m_2alpha > 1.
bool dichotomy_holds(const SymmetricSpace& space);

// Spaces with two restricted roots and m_alpha = m_2alpha + 1.
bool is_critical_space(const SymmetricSpace& space);

}  // namespace orbsmooth
