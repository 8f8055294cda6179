#include "orbsmooth/orbit_classifier.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace orbsmooth {

std::string_view to_string(OrbitKind k) {
    switch (k) {
    case OrbitKind::Normalizer: return "Normalizer";
    case OrbitKind::Regular: return "Regular";
    case OrbitKind::ContinuousNonRegular: return "ContinuousNonRegular";
    }
    return "?";
}

std::string_view to_string(CaseClause c) {
    switch (c) {
    case CaseClause::SingularFactor: return "singular_factor";
    case CaseClause::CircleNeverL2: return "circle_never_l2";
    case CaseClause::CriticalOneRegular: return "critical_one_regular";
    case CaseClause::CriticalNoneRegular: return "critical_none_regular";
    case CaseClause::ContinuousPairL2: return "continuous_pair_l2";
    case CaseClause::ContinuousTripleL2: return "continuous_triple_l2";
    }
    return "?";
}

std::string_view describe(CaseClause c) {
    switch (c) {
    case CaseClause::SingularFactor:
        return "a point lies in the normalizer of K; the product is singular";
    case CaseClause::CircleNeverL2:
        return "SU(2)/SO(2): continuous pairs are absolutely continuous but never square-integrable";
    case CaseClause::CriticalOneRegular:
        return "m_alpha = m_2alpha + 1 and at least one point is regular: square-integrable";
    case CaseClause::CriticalNoneRegular:
        return "m_alpha = m_2alpha + 1 and neither point is regular: absolutely continuous, not square-integrable";
    case CaseClause::ContinuousPairL2:
        return "m_alpha - m_2alpha >= 2: every continuous pair is square-integrable";
    case CaseClause::ContinuousTripleL2:
        return "three continuous orbital measures: square-integrable";
    }
    return "?";
}

namespace {

bool near_pi_lattice(double v, double eps) {
    const double r = std::remainder(v, std::numbers::pi);
    return std::abs(r) <= eps;
}

OrbitClass make_class(const SymmetricSpace& space, bool alpha, bool two_alpha) {
    OrbitClass c;
    c.alpha_annihilated = alpha;
    // alpha(Z) = 0 mod pi forces 2alpha(Z) = 0 mod pi.
    c.two_alpha_annihilated = space.root_kind == RootKind::BC1 && (two_alpha || alpha);
    if (alpha) {
        c.kind = OrbitKind::Normalizer;
        c.coset_dim = 0;
    } else if (c.two_alpha_annihilated) {
        c.kind = OrbitKind::ContinuousNonRegular;
        c.coset_dim = space.m_alpha;
    } else {
        c.kind = OrbitKind::Regular;
        c.coset_dim = space.m_alpha + space.m_2alpha;
    }
    return c;
}

DimensionRoute dimension_route(const SymmetricSpace& space, const std::vector<OrbitClass>& classes) {
    DimensionRoute r;
    r.dim_gk = space.dim_gk;
    for (const auto& c : classes) {
        r.coset_dims.push_back(c.coset_dim);
        r.dim_sum += c.coset_dim;
    }
    r.l1 = r.dim_sum >= r.dim_gk;
    r.l2 = r.dim_sum > r.dim_gk;
    return r;
}

[[noreturn]] void report_disagreement(const SymmetricSpace& space, const SmoothnessVerdict& v) {
    std::ostringstream os;
    os << "case analysis and dimension criterion disagree on " << space.tag() << ": case ("
       << to_string(v.case_fired) << ") l1=" << v.case_l1 << " l2=" << v.case_l2
       << ", dimensions sum " << v.route_dimension.dim_sum << " vs dim G/K " << v.route_dimension.dim_gk;
    throw ConsistencyError(os.str());
}

void check_eps(double eps) {
    if (!(eps > 0.0 && eps <= kMaxClassifyEps))
        throw std::invalid_argument("classification tolerance must lie in (0, 1e-3]");
}

}  // namespace

bool is_critical_space(const SymmetricSpace& space) {
    return space.root_kind == RootKind::BC1 && space.m_alpha == space.m_2alpha + 1;
}

bool dichotomy_holds(const SymmetricSpace& space) { return space.m_alpha - space.m_2alpha > 1; }

OrbitClass classify_point(const SymmetricSpace& space, const RadialPoint& point, double eps) {
    check_eps(eps);
    if (point.exact) {
        const PiMultiple doubled = point.exact->scaled(2);
        return make_class(space, point.exact->is_integer(), doubled.is_integer());
    }
    return make_class(space, near_pi_lattice(point.t, eps), near_pi_lattice(2.0 * point.t, eps));
}

SmoothnessVerdict decide_pair(const SymmetricSpace& space, const RadialPoint& t1, const RadialPoint& t2,
                              double eps) {
    SmoothnessVerdict v;
    v.classes = {classify_point(space, t1, eps), classify_point(space, t2, eps)};
    const OrbitClass& c1 = v.classes[0];
    const OrbitClass& c2 = v.classes[1];

    // Route (i): case analysis on the point classes.
    v.case_l1 = c1.continuous() && c2.continuous();
    if (!v.case_l1) {
        v.case_fired = CaseClause::SingularFactor;
        v.case_l2 = false;
    } else if (space.family.family == Family::AI) {
        v.case_fired = CaseClause::CircleNeverL2;
        v.case_l2 = false;
    } else if (is_critical_space(space)) {
        const bool any_regular = c1.regular() || c2.regular();
        v.case_fired = any_regular ? CaseClause::CriticalOneRegular : CaseClause::CriticalNoneRegular;
        v.case_l2 = any_regular;
    } else {
        v.case_fired = CaseClause::ContinuousPairL2;
        v.case_l2 = true;
    }

    // Route (ii): double-coset dimensions.
    v.route_dimension = dimension_route(space, v.classes);

    if (v.case_l1 != v.route_dimension.l1 || v.case_l2 != v.route_dimension.l2) report_disagreement(space, v);
    v.l1 = v.case_l1;
    v.l2 = v.case_l2;
    return v;
}

SmoothnessVerdict decide_triple(const SymmetricSpace& space, const RadialPoint& t1, const RadialPoint& t2,
                                const RadialPoint& t3, double eps) {
    SmoothnessVerdict v;
    v.classes = {classify_point(space, t1, eps), classify_point(space, t2, eps),
                 classify_point(space, t3, eps)};
    bool all_continuous = true;
    for (const auto& c : v.classes) all_continuous = all_continuous && c.continuous();
    v.case_fired = all_continuous ? CaseClause::ContinuousTripleL2 : CaseClause::SingularFactor;
    v.case_l1 = v.case_l2 = all_continuous;
    v.route_dimension = dimension_route(space, v.classes);

    // A normaliser factor has coset dimension 0; every continuous one has
    // positive dimension, so both readings must match.
    bool all_positive = true;
    for (int d : v.route_dimension.coset_dims) all_positive = all_positive && d > 0;
    v.route_dimension.l1 = v.route_dimension.l2 = all_positive;
    if (all_positive != all_continuous) report_disagreement(space, v);
    v.l1 = v.l2 = all_continuous;
    return v;
}

}  // namespace orbsmooth
