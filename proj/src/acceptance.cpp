#include "orbsmooth/acceptance.hpp"

#include "orbsmooth/asymptotics.hpp"
#include "orbsmooth/dimension.hpp"
#include "orbsmooth/jacobi.hpp"
#include "orbsmooth/jacobi_exact.hpp"
#include "orbsmooth/orbit_classifier.hpp"
#include "orbsmooth/plancherel.hpp"
#include "orbsmooth/report.hpp"
#include "orbsmooth/space_catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbsmooth {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::vector<SymmetricSpace> spaces_q_at_most(int max_q) {
    std::vector<SymmetricSpace> out;
    for (auto& s : list_catalog(std::max(max_q, 3)))
        if (!s.family.q || *s.family.q <= max_q) out.push_back(std::move(s));
    return out;
}

bool is_half_integer(double v) { return v != std::floor(v); }

// ---- 1 ---------------------------------------------------------------------

Outcome catalog_fidelity(const AcceptanceOptions& opt) {
    const std::string path = opt.data_dir + "/catalog_reference.csv";
    std::ifstream in(path, std::ios::binary);
    if (!in) return {false, "cannot read " + path};
    std::stringstream ref;
    ref << in.rdbuf();
    const std::string produced = catalog_csv(6);

    std::vector<std::string> a, b;
    for (std::istringstream s(ref.str()); !s.eof();) {
        std::string line;
        if (std::getline(s, line)) a.push_back(line);
    }
    for (std::istringstream s(produced); !s.eof();) {
        std::string line;
        if (std::getline(s, line)) b.push_back(line);
    }
    int diffs = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i)
        if (i >= a.size() || i >= b.size() || a[i] != b[i]) ++diffs;

    std::set<Family> families;
    for (const auto& s : list_catalog(6)) families.insert(s.family.family);

    bool bii2_rejected = false;
    try {
        make_space(Family::BII, 2);
    } catch (const std::invalid_argument&) {
        bii2_rejected = true;
    }
    const bool ok = diffs == 0 && families.size() == 6 && bii2_rejected;
    return {ok, fmt("%zu rows, %d differing lines, %zu families, BII(2) %s", b.size() > 0 ? b.size() - 1 : 0,
                    diffs, families.size(), bii2_rejected ? "rejected" : "accepted")};
}

// ---- 2 ---------------------------------------------------------------------

// Relative error of v against the exact value e. At an exact zero the error
// is taken relative to sup |P_n| on [-1, 1].
double rational_rel_err(double v, const Rational& e, double scale) {
    const Rational diff = abs(Rational(v) - e);
    if (e == 0) return diff.get_d() / scale;
    return Rational(diff / abs(e)).get_d();
}

Outcome jacobi_triangle(const AcceptanceOptions&) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<JacobiParams, RationalJacobiParams>> params;
    for (const auto& s : list_catalog(6)) {
        const DoubledJacobiParams d = doubled_jacobi_params(s);
        if (seen.insert({d.two_a, d.two_b}).second)
            params.push_back({jacobi_params(s), exact_jacobi_params(s)});
    }
    const std::vector<double> xs = {-1.0, -0.5, 0.0, 1.0 / 3.0, std::cos(1.0), 1.0};

    double worst_2f1 = 0.0, worst_rec = 0.0, worst_end = 0.0;
    for (const auto& [p, rp] : params) {
        for (long n = 0; n <= kExactMaxDegree; ++n) {
            const double scale = std::max(jacobi_endpoint_value(n, p, 1), std::abs(jacobi_endpoint_value(n, p, -1)));
            for (double x : xs) {
                const Rational exact = jacobi_exact(n, rp, Rational(x));
                worst_2f1 = std::max(worst_2f1, rational_rel_err(jacobi_via_2f1(n, p, x), exact, scale));
                worst_rec = std::max(worst_rec, rational_rel_err(jacobi_recurrence(n, p, x), exact, scale));
            }
            for (int sign : {1, -1}) {
                const double closed = jacobi_endpoint_value(n, p, sign);
                const double upward = detail::jacobi_upward(n, p, static_cast<double>(sign));
                const Rational exact =
                    sign > 0 ? rational_binomial(n, rp.a)
                             : Rational((n % 2 ? -1 : 1) * rational_binomial(n, rp.b));
                worst_end = std::max(worst_end, std::abs(upward - closed) / std::abs(closed));
                worst_end = std::max(worst_end, rational_rel_err(closed, exact, scale));
            }
        }
    }
    // 2^-50: the MPFR route is rounded once to double, the exact value once more.
    const bool ok = worst_2f1 <= std::ldexp(1.0, -50) && worst_rec <= 1e-10 && worst_end <= 1e-12;
    return {ok, fmt("%zu (a,b) pairs; max rel err 2F1 %.2e, recurrence %.2e, endpoints %.2e", params.size(),
                    worst_2f1, worst_rec, worst_end)};
}

// ---- 3 ---------------------------------------------------------------------

Outcome normalization(const AcceptanceOptions&) {
    double worst = 0.0;
    int cases = 0;
    for (const auto& s : spaces_q_at_most(4)) {
        const JacobiParams p = jacobi_params(s);
        for (long n : {1L, 10L, 1000L, 1000000L}) {
            const SphericalValue v = spherical_function(s, n, RadialPoint::pi_multiple(0, 1));
            worst = std::max(worst, std::abs(v.value - 1.0));
            const SphericalValue d = spherical_function(s, n, RadialPoint::radians(0.0));
            worst = std::max(worst, std::abs(d.value - 1.0));
            // The prefactor and P_n(1) cancel as closed forms.
            const double telescoped = std::exp(v.prefactor_log) * jacobi_endpoint_value(n, p, 1);
            worst = std::max(worst, std::abs(telescoped - 1.0));
            ++cases;
        }
    }
    return {worst <= 1e-12, fmt("%d cases, max |phi(0) - 1| %.2e", cases, worst)};
}

// ---- 4 ---------------------------------------------------------------------

Outcome hypergeometric_form(const AcceptanceOptions&) {
    double worst = 0.0;
    int evaluations = 0;
    std::string where;
    for (const auto& s : spaces_q_at_most(4)) {
        const JacobiParams p = jacobi_params(s);
        for (int k = 0; k < 20; ++k) {
            // Fundamental domain: beta(Z) = t * beta_multiplier covers (0, pi).
            const RadialPoint t = RadialPoint::radians((k + 0.5) * 0.5 * radial_period(s) / 20.0);
            for (long n = 0; n <= 100; ++n) {
                const double jac = spherical_function(s, n, t).value;
                const double hyp = spherical_function_hypergeometric(s, n, t);
                // Near a zero of phi the comparison is made against the size of
                // the oscillation envelope instead of the value itself.
                double floor_value = 0.0;
                const double theta = beta_multiplier(s) * t.t;
                if (n >= 1 && theta > kAsymptoticEndpointGuard && theta < kPi - kAsymptoticEndpointGuard)
                    floor_value = std::min(
                        1.0, std::exp(spherical_prefactor_log(n, p.a)) * jacobi_asymptotic(n, p, theta).envelope);
                const double err = std::abs(jac - hyp) / std::max(std::abs(hyp), floor_value);
                if (err > worst) {
                    worst = err;
                    where = s.tag() + fmt(" n=%ld t=%.4f", n, t.t);
                }
                ++evaluations;
            }
        }
    }
    return {worst <= 1e-10, fmt("%d evaluations, max rel err %.2e (%s)", evaluations, worst, where.c_str())};
}

// ---- 5 ---------------------------------------------------------------------

Outcome dimension_anchors(const AcceptanceOptions&) {
    double ai = 0.0;
    {
        const SphericalDimension dim(jacobi_params(make_space(Family::AI)));
        for (long n = 0; n <= 1000000; ++n) {
            const double exact = 2.0 * static_cast<double>(n) + 1.0;
            ai = std::max(ai, std::abs(dim(n) - exact) / exact);
        }
    }
    double aiii = 0.0;
    {
        const SphericalDimension dim(jacobi_params(make_space(Family::AIII, 2)));
        for (long n = 0; n <= 100; ++n) {
            const double m = static_cast<double>(n + 1);
            aiii = std::max(aiii, std::abs(dim(n) - m * m * m) / (m * m * m));
        }
    }
    double quad_int = 0.0, quad_half = 0.0;
    for (const auto& s : spaces_q_at_most(5)) {
        const JacobiParams p = jacobi_params(s);
        const bool half = is_half_integer(p.a) || is_half_integer(p.b);
        for (long n = 0; n <= 30; ++n) {
            const double closed = dim_spherical(s, n).dim;
            const double quad = dim_by_quadrature(s, n, default_quadrature_nodes(s, n));
            double& worst = half ? quad_half : quad_int;
            worst = std::max(worst, std::abs(quad - closed) / closed);
        }
    }
    double growth = 0.0;
    std::string growth_at;
    for (const auto& s : spaces_q_at_most(5)) {
        const LineFit f = fit_growth_order(s, 1000, 10000);
        const double dev = std::abs(f.slope - (s.m_alpha + s.m_2alpha));
        if (dev >= growth) {
            growth = dev;
            growth_at = s.tag();
        }
    }
    const bool ok = ai <= 1e-9 && aiii <= 1e-9 && quad_int <= 1e-8 && quad_half <= 1e-6 && growth <= 0.01;
    return {ok, fmt("AI %.2e, AIII(2) %.2e, quadrature %.2e / %.2e (half-integer), growth dev %.4f (%s)", ai,
                    aiii, quad_int, quad_half, growth, growth_at.c_str())};
}

// ---- 6 ---------------------------------------------------------------------

Outcome decay_exponents(const AcceptanceOptions&) {
    double worst_regular = 0.0, worst_singular = 0.0, min_ratio = 1.0;
    int fits = 0;
    for (const auto& s : spaces_q_at_most(3)) {
        const double regular = 0.5 * (s.m_alpha + s.m_2alpha);
        for (double t : {0.7, 1.2}) {
            const DecayFit f = spherical_decay_fit(s, RadialPoint::radians(t), 100, 10000);
            worst_regular = std::max(worst_regular, std::abs(f.exponent - regular));
            ++fits;
        }
        if (s.root_kind == RootKind::BC1) {
            const DecayFit f = spherical_decay_fit(s, RadialPoint::pi_multiple(1, 2), 100, 10000);
            worst_singular = std::max(worst_singular, std::abs(f.exponent - 0.5 * s.m_alpha));
            min_ratio = std::min(min_ratio, f.lower_ratio);
            ++fits;
        }
    }
    // Lower bound: the window means of |phi|^2 n^{m_alpha} stay within a factor 2.
    const bool ok = worst_regular <= 0.05 && worst_singular <= 0.05 && min_ratio >= 0.5;
    return {ok, fmt("%d fits, max dev regular %.4f, non-regular %.4f, lower-bound ratio %.3f", fits, worst_regular,
                    worst_singular, min_ratio)};
}

// ---- 7 ---------------------------------------------------------------------

Outcome asymptotic_residual(const AcceptanceOptions&) {
    double worst = 1e300;
    const std::vector<JacobiParams> params = {{0, 0}, {1, 0}, {7, 3}, {1.5, 1.5}};
    for (const auto& p : params)
        for (double theta : {0.5, 1.0, 2.0})
            worst = std::min(worst, asymptotic_residual_fit(p, theta, 100, 100000).slope);
    return {worst >= 1.4, fmt("12 fits, min residual exponent %.4f", worst)};
}

// ---- 8 ---------------------------------------------------------------------

Outcome route_equivalence(const AcceptanceOptions&) {
    long pairs = 0, disagreements = 0;
    for (const auto& s : list_catalog(6)) {
        for (int k1 = 0; k1 <= 100; ++k1) {
            for (int k2 = 0; k2 <= 100; ++k2) {
                const std::pair<RadialPoint, RadialPoint> inputs[] = {
                    {RadialPoint::pi_multiple(k1, 100), RadialPoint::pi_multiple(k2, 100)},
                    {RadialPoint::radians(k1 * kPi / 100.0), RadialPoint::radians(k2 * kPi / 100.0)},
                };
                for (const auto& [t1, t2] : inputs) {
                    ++pairs;
                    try {
                        const SmoothnessVerdict v = decide_pair(s, t1, t2);
                        if (v.case_l1 != v.route_dimension.l1 || v.case_l2 != v.route_dimension.l2) ++disagreements;
                    } catch (const ConsistencyError&) {
                        ++disagreements;
                    }
                }
            }
        }
    }
    return {disagreements == 0, fmt("%ld pairs, %ld disagreements", pairs, disagreements)};
}

// ---- 9 ---------------------------------------------------------------------

struct MatrixEntry {
    SymmetricSpace space;
    std::vector<RadialPoint> points;
};

Outcome crosscheck_matrix(const AcceptanceOptions& opt) {
    const RadialPoint half_pi = RadialPoint::pi_multiple(1, 2);
    const RadialPoint quarter_pi = RadialPoint::pi_multiple(1, 4);
    const auto r = RadialPoint::radians;
    std::vector<MatrixEntry> entries;
    const SymmetricSpace ai = make_space(Family::AI);
    entries.push_back({ai, {half_pi, half_pi}});
    entries.push_back({ai, {quarter_pi, quarter_pi}});
    entries.push_back({ai, {half_pi, quarter_pi}});
    entries.push_back({ai, {r(1.0), r(1.3)}});
    for (const auto& s : {make_space(Family::AIII, 2), make_space(Family::CII, 2), make_space(Family::FII)})
        entries.push_back({s, {half_pi, half_pi}});
    entries.push_back({make_space(Family::AIII, 2), {r(0.7), half_pi}});
    entries.push_back({make_space(Family::AIII, 2), {r(0.7), r(1.1)}});
    for (const auto& s : {make_space(Family::AIII, 3), make_space(Family::CII, 3), make_space(Family::AII),
                          make_space(Family::BII, 3), make_space(Family::BII, 5)}) {
        entries.push_back({s, {half_pi, half_pi}});
        entries.push_back({s, {r(0.7), r(1.1)}});
    }
    entries.push_back({ai, {half_pi, half_pi, half_pi}});
    entries.push_back({make_space(Family::FII), {half_pi, half_pi, half_pi}});

    SeriesSchedule schedule;
    schedule.n_max = opt.tier == Tier::Quick ? 100000 : 1000000;
    schedule.threads = opt.threads;
    int agree = 0;
    std::string failures;
    for (const auto& e : entries) {
        const ConsistencyReport rep = crosscheck(e.space, e.points, schedule);
        if (rep.agree) {
            ++agree;
        } else {
            std::string pts;
            for (const auto& p : e.points) pts += (pts.empty() ? "" : ",") + p.to_string();
            failures += fmt("; %s(%s) %s, tail %.3f", e.space.tag().c_str(), pts.c_str(),
                            std::string(to_string(rep.diagnosis.verdict)).c_str(), rep.diagnosis.tail_exponent);
        }
    }
    return {agree == static_cast<int>(entries.size()),
            fmt("%d/%zu agree at N_max=%ld", agree, entries.size(), schedule.n_max) + failures};
}

// ---- 10 --------------------------------------------------------------------

Outcome ai_log_divergence(const AcceptanceOptions& opt) {
    const RadialPoint half_pi = RadialPoint::pi_multiple(1, 2);
    const std::vector<RadialPoint> pts = {half_pi, half_pi};
    SeriesSchedule schedule;
    schedule.n_max = 1000000;
    schedule.threads = opt.threads;
    const SeriesTrace trace = partial_sums(make_space(Family::AI), pts, schedule);
    const LogGrowthFit f = fit_log_growth(trace, 1000, 1000000);
    return {f.r_squared >= 0.99 && f.slope > 0.0,
            fmt("slope %.5f, r^2 %.6f over %d checkpoints", f.slope, f.r_squared, f.points)};
}

// ---- 11 --------------------------------------------------------------------

Outcome trig_closed_forms(const AcceptanceOptions&) {
    double worst = 0.0;
    const long N = 100000;
    for (const RadialPoint& x : {RadialPoint::pi_multiple(1, 2), RadialPoint::radians(1.0), RadialPoint::pi_multiple(1, 1)})
        worst = std::max(worst, std::abs(trig_series_reference(x, N, TrigKind::Sine) - trig_series_limit(x, TrigKind::Sine)));
    for (const RadialPoint& x : {RadialPoint::pi_multiple(1, 2), RadialPoint::pi_multiple(1, 1)})
        worst = std::max(worst,
                         std::abs(trig_series_reference(x, N, TrigKind::Cosine) - trig_series_limit(x, TrigKind::Cosine)));
    return {worst <= 1e-3, fmt("5 series at N=%ld, max |S_N - limit| %.2e", N, worst)};
}

// ---- 12 --------------------------------------------------------------------

Outcome su2_expansion(const AcceptanceOptions&) {
    const double e1 = su2_residual_exponent(RadialPoint::radians(1.0), 100, 100000);
    const double e2 = su2_residual_exponent(RadialPoint::pi_multiple(1, 2), 100, 100000);
    return {std::min(e1, e2) >= 0.8, fmt("residual exponent %.4f at t=1, %.4f at t=pi/2", e1, e2)};
}

// ---- 13 --------------------------------------------------------------------

Outcome determinism(const AcceptanceOptions& opt) {
    AcceptanceOptions quick = opt;
    quick.tier = Tier::Quick;
    std::string first, second;
    for (std::string* out : {&first, &second})
        for (int id = 1; id <= 12; ++id) *out += format_result_line(run_criterion(id, quick)) + "\n";
    std::size_t lines = static_cast<std::size_t>(std::count(first.begin(), first.end(), '\n'));
    return {first == second, fmt("two quick runs of %zu lines, %s", lines, first == second ? "identical" : "differ")};
}

using CriterionFn = Outcome (*)(const AcceptanceOptions&);

struct Entry {
    CriterionInfo info;
    CriterionFn fn;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {{1, "catalog fidelity", 1}, catalog_fidelity},
        {{2, "Jacobi oracle triangle", 5}, jacobi_triangle},
        {{3, "normalization at the identity", 5}, normalization},
        {{4, "hypergeometric and Jacobi forms agree", 10}, hypergeometric_form},
        {{5, "dimension anchors", 30}, dimension_anchors},
        {{6, "decay exponents", 60}, decay_exponents},
        {{7, "asymptotic residual", 30}, asymptotic_residual},
        {{8, "decision-route equivalence", 10}, route_equivalence},
        {{9, "series cross-check matrix", 300}, crosscheck_matrix},
        {{10, "AI logarithmic divergence", 60}, ai_log_divergence},
        {{11, "trigonometric closed forms", 5}, trig_closed_forms},
        {{12, "SU(2)/SO(2) expansion residual", 30}, su2_expansion},
        {{13, "determinism", 120}, determinism},
    };
    return entries;
}

}  // namespace

const std::vector<CriterionInfo>& acceptance_criteria() {
    static const std::vector<CriterionInfo> infos = [] {
        std::vector<CriterionInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
    const auto& entries = registry();
    const auto it = std::find_if(entries.begin(), entries.end(), [id](const Entry& e) { return e.info.id == id; });
    if (it == entries.end()) throw std::out_of_range("no acceptance criterion " + std::to_string(id));

    CriterionResult r;
    r.id = id;
    r.name = it->info.name;
    r.budget = it->info.budget_seconds;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Outcome o = it->fn(options);
        r.passed = o.passed;
        r.detail = o.detail;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.budget) {
        r.passed = false;
        r.detail += fmt("; over budget (%.0f s)", r.budget);
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (const auto& info : acceptance_criteria()) {
        out.push_back(run_criterion(info.id, options));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string format_result_line(const CriterionResult& r) {
    return fmt("%s [%02d] %s: ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str()) + r.detail;
}

}  // namespace orbsmooth
