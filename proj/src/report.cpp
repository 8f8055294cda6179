#include "orbsmooth/report.hpp"

#include "orbsmooth/dimension.hpp"
#include "orbsmooth/jacobi.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace orbsmooth {

using nlohmann::ordered_json;

std::optional<OutputFormat> parse_output_format(std::string_view s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    return std::nullopt;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf.data(), end);
}

namespace {

// Integer-valued quantities are printed at 15 significant digits so that
// Gamma-ratio noise in the last bit does not show up as 63.99999999999999.
std::string format_dim(double v) {
    std::ostringstream os;
    os << std::setprecision(15) << v;
    return os.str();
}

// Left-justifies to a display width, counting UTF-8 code points.
std::string pad(const std::string& s, std::size_t width) {
    std::size_t glyphs = 0;
    for (unsigned char c : s) glyphs += (c & 0xC0) != 0x80;
    return glyphs >= width ? s : s + std::string(width - glyphs, ' ');
}

std::string family_quotient(Family f) {
    switch (f) {
        case Family::AI: return "SU(2)/SO(2)";
        case Family::AII: return "SU(4)/Sp(4)";
        case Family::AIII: return "SU(q+1)/S(U(q)×U(1))";
        case Family::BII: return "SO(q+1)/S(O(q)×O(1))";
        case Family::CII: return "Sp(2q+2)/Sp(2q)×Sp(2)";
        case Family::FII: return "F4/SO(9)";
    }
    return "";
}

ordered_json space_json(const SymmetricSpace& s) {
    const JacobiParams p = jacobi_params(s);
    ordered_json j;
    j["family"] = std::string(to_string(s.family.family));
    j["q"] = s.family.q ? ordered_json(*s.family.q) : ordered_json(nullptr);
    j["name"] = s.name;
    j["tag"] = s.tag();
    j["m_alpha"] = s.m_alpha;
    j["m_2alpha"] = s.m_2alpha;
    j["root_kind"] = std::string(to_string(s.root_kind));
    j["dim_gk"] = s.dim_gk;
    j["a"] = p.a;
    j["b"] = p.b;
    return j;
}

ordered_json point_json(const RadialPoint& p) {
    ordered_json j;
    j["input"] = p.to_string();
    j["radians"] = p.t;
    j["exact"] = p.exact.has_value();
    return j;
}

std::string points_label(const std::vector<RadialPoint>& points) {
    std::string out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) out += ", ";
        out += points[i].to_string();
    }
    return out;
}

}  // namespace

// ---- catalog --------------------------------------------------------------

ordered_json catalog_json(int max_q) {
    const auto spaces = list_catalog(max_q);
    ordered_json families = ordered_json::array();
    for (Family f : {Family::AI, Family::AII, Family::AIII, Family::BII, Family::CII, Family::FII}) {
        ordered_json block;
        block["family"] = std::string(to_string(f));
        block["quotient"] = family_quotient(f);
        block["q_min"] = takes_parameter(f) ? ordered_json(min_parameter(f)) : ordered_json(nullptr);
        ordered_json members = ordered_json::array();
        for (const auto& s : spaces)
            if (s.family.family == f) members.push_back(space_json(s));
        block["spaces"] = std::move(members);
        families.push_back(std::move(block));
    }
    ordered_json doc;
    doc["max_q"] = max_q;
    doc["families"] = std::move(families);
    return doc;
}

std::string catalog_csv(int max_q) {
    std::ostringstream os;
    os << "family,q,name,root_kind,m_alpha,m_2alpha,dim_gk,a,b\n";
    for (const auto& s : list_catalog(max_q)) {
        const JacobiParams p = jacobi_params(s);
        os << to_string(s.family.family) << ',' << (s.family.q ? std::to_string(*s.family.q) : "") << ','
           << s.name << ',' << to_string(s.root_kind) << ',' << s.m_alpha << ',' << s.m_2alpha << ','
           << s.dim_gk << ',' << format_double(p.a) << ',' << format_double(p.b) << '\n';
    }
    return os.str();
}

std::string catalog_text(int max_q) {
    std::ostringstream os;
    os << pad("tag", 9) << pad("space", 26) << pad("kind", 6) << std::setw(8) << "m_alpha" << std::setw(9) << "m_2alpha" << std::setw(7) << "dim"
       << std::setw(6) << "a" << std::setw(6) << "b" << '\n';
    for (const auto& s : list_catalog(max_q)) {
        const JacobiParams p = jacobi_params(s);
        os << pad(s.tag(), 9) << pad(s.name, 26) << pad(std::string(to_string(s.root_kind)), 6) << std::setw(8) << s.m_alpha << std::setw(9) << s.m_2alpha
           << std::setw(7) << s.dim_gk << std::setw(6) << format_double(p.a) << std::setw(6)
           << format_double(p.b) << '\n';
    }
    return os.str();
}

// ---- spherical ------------------------------------------------------------

SphericalReport make_spherical_report(const SymmetricSpace& space, long n, const RadialPoint& point,
                                      bool with_oracle) {
    const SphericalValue v = spherical_function(space, n, point);
    SphericalReport r;
    r.space = space.tag();
    r.n = n;
    r.point = point;
    r.value = v.value;
    r.prefactor_log = v.prefactor_log;
    r.prefactor = std::exp(v.prefactor_log);
    if (with_oracle) r.hypergeometric = spherical_function_hypergeometric(space, n, point);
    return r;
}

ordered_json spherical_json(const SphericalReport& r) {
    ordered_json j;
    j["space"] = r.space;
    j["n"] = r.n;
    j["t"] = point_json(r.point);
    j["value"] = r.value;
    j["prefactor"] = r.prefactor;
    j["prefactor_log"] = r.prefactor_log;
    if (r.hypergeometric) {
        ordered_json o;
        o["hypergeometric"] = *r.hypergeometric;
        o["abs_diff"] = std::abs(*r.hypergeometric - r.value);
        j["oracle"] = std::move(o);
    }
    return j;
}

std::string spherical_text(const SphericalReport& r) {
    std::ostringstream os;
    os << "space: " << r.space << "\nn: " << r.n << "\nt: " << r.point.to_string() << "\nvalue: "
       << format_double(r.value) << "\nprefactor: " << format_double(r.prefactor) << '\n';
    if (r.hypergeometric)
        os << "hypergeometric: " << format_double(*r.hypergeometric)
           << "\nabs_diff: " << format_double(std::abs(*r.hypergeometric - r.value)) << '\n';
    return os.str();
}

// ---- dims -----------------------------------------------------------------

std::vector<DimsRow> make_dims_rows(const SymmetricSpace& space, long n_max, bool check_quadrature) {
    if (n_max < 0) throw std::invalid_argument("dims: n-max must be non-negative");
    if (check_quadrature && n_max > kQuadratureMaxDegree)
        throw std::invalid_argument("dims: --check-quadrature supports n-max <= " +
                                    std::to_string(kQuadratureMaxDegree));
    const SphericalDimension dim(jacobi_params(space));
    std::vector<DimsRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        DimsRow row;
        row.n = n;
        row.dim = dim(n);
        if (check_quadrature) {
            const double q = dim_by_quadrature(space, n, default_quadrature_nodes(space, n));
            row.quadrature_dim = q;
            row.rel_err = std::abs(q - row.dim) / row.dim;
        }
        rows.push_back(row);
    }
    return rows;
}

std::string dims_csv(const std::vector<DimsRow>& rows) {
    std::ostringstream os;
    os << "n,dim,quadrature_dim,rel_err\n";
    for (const auto& r : rows) {
        os << r.n << ',' << format_dim(r.dim) << ',';
        if (r.quadrature_dim) os << format_dim(*r.quadrature_dim);
        os << ',';
        if (r.rel_err) os << std::setprecision(3) << std::scientific << *r.rel_err << std::defaultfloat;
        os << '\n';
    }
    return os.str();
}

ordered_json dims_json(const SymmetricSpace& space, const std::vector<DimsRow>& rows) {
    ordered_json j;
    j["space"] = space.tag();
    j["growth_order"] = space.m_alpha + space.m_2alpha;
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json e;
        e["n"] = r.n;
        e["dim"] = r.dim;
        e["quadrature_dim"] = r.quadrature_dim ? ordered_json(*r.quadrature_dim) : ordered_json(nullptr);
        e["rel_err"] = r.rel_err ? ordered_json(*r.rel_err) : ordered_json(nullptr);
        arr.push_back(std::move(e));
    }
    j["rows"] = std::move(arr);
    return j;
}

// ---- classify -------------------------------------------------------------

ordered_json classify_json(const SymmetricSpace& space, const std::vector<RadialPoint>& points,
                           const SmoothnessVerdict& v) {
    ordered_json classes = ordered_json::array();
    for (std::size_t i = 0; i < v.classes.size(); ++i) {
        const OrbitClass& c = v.classes[i];
        ordered_json e;
        e["t"] = point_json(points.at(i));
        e["kind"] = std::string(to_string(c.kind));
        e["alpha_annihilated"] = c.alpha_annihilated;
        e["two_alpha_annihilated"] = c.two_alpha_annihilated;
        e["coset_dim"] = c.coset_dim;
        classes.push_back(std::move(e));
    }
    ordered_json j;
    j["space"] = space.tag();
    j["classes"] = std::move(classes);
    j["l1"] = v.l1;
    j["l2"] = v.l2;
    j["case_fired"] = std::string(to_string(v.case_fired));
    j["case_description"] = std::string(describe(v.case_fired));
    j["dim_sum"] = v.route_dimension.dim_sum;
    j["dim_gk"] = v.route_dimension.dim_gk;
    return j;
}

std::string classify_text(const SymmetricSpace& space, const std::vector<RadialPoint>& points,
                          const SmoothnessVerdict& v) {
    std::ostringstream os;
    os << "space: " << space.tag() << " = " << space.name << '\n';
    for (std::size_t i = 0; i < v.classes.size(); ++i)
        os << "t" << i + 1 << " = " << points.at(i).to_string() << ": " << to_string(v.classes[i].kind)
           << ", dim KzK = " << v.classes[i].coset_dim << '\n';
    os << "dim sum " << v.route_dimension.dim_sum << " vs dim G/K " << v.route_dimension.dim_gk << '\n';
    os << "L1: " << (v.l1 ? "yes" : "no") << "\nL2: " << (v.l2 ? "yes" : "no") << '\n';
    os << "case: " << to_string(v.case_fired) << " (" << describe(v.case_fired) << ")\n";
    return os.str();
}

// ---- norm -----------------------------------------------------------------

std::string norm_csv(const SeriesTrace& trace) {
    std::ostringstream os;
    os << "N,S_N,block_mean\n";
    for (const auto& c : trace.checkpoints)
        os << c.N << ',' << format_double(c.partial_sum) << ',' << format_double(c.interval_mean) << '\n';
    return os.str();
}

ordered_json diagnosis_json(const ConsistencyReport& r) {
    ordered_json j;
    j["verdict"] = std::string(to_string(r.diagnosis.verdict));
    j["tail_exponent"] = r.diagnosis.tail_exponent;
    j["log_slope"] = r.diagnosis.log_slope;
    j["r_squared"] = r.diagnosis.r_squared;
    j["closed_form_l2"] = r.closed_form_l2;
    j["expected"] = std::string(to_string(r.expected));
    j["agree"] = r.agree;
    j["blocks_used"] = r.diagnosis.blocks_used;
    j["checkpoints_used"] = r.diagnosis.checkpoints_used;
    return j;
}

ordered_json norm_json(const SymmetricSpace& space, const std::vector<RadialPoint>& points,
                       const ConsistencyReport& r) {
    ordered_json pts = ordered_json::array();
    for (const auto& p : points) pts.push_back(point_json(p));
    ordered_json cps = ordered_json::array();
    for (const auto& c : r.trace.checkpoints) {
        ordered_json e;
        e["N"] = c.N;
        e["S_N"] = c.partial_sum;
        e["block_mean"] = c.interval_mean;
        cps.push_back(std::move(e));
    }
    ordered_json j;
    j["space"] = space.tag();
    j["points"] = std::move(pts);
    j["n_max"] = r.trace.n_max;
    j["checkpoints"] = std::move(cps);
    j["diagnosis"] = diagnosis_json(r);
    return j;
}

std::string norm_text(const SymmetricSpace& space, const std::vector<RadialPoint>& points,
                      const ConsistencyReport& r) {
    std::ostringstream os;
    os << "space: " << space.tag() << "\npoints: " << points_label(points) << "\nN_max: " << r.trace.n_max
       << '\n';
    if (!r.trace.checkpoints.empty())
        os << "S_N: " << format_double(r.trace.checkpoints.back().partial_sum) << '\n';
    os << "verdict: " << to_string(r.diagnosis.verdict) << "\ntail exponent: "
       << format_double(r.diagnosis.tail_exponent) << "\nlog slope: " << format_double(r.diagnosis.log_slope)
       << " (r^2 " << format_double(r.diagnosis.r_squared) << ")\nclosed-form L2: "
       << (r.closed_form_l2 ? "yes" : "no") << "\nagree: " << (r.agree ? "yes" : "no") << '\n';
    return os.str();
}

}  // namespace orbsmooth
