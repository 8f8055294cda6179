// orbsmooth: command-line front end for the rank-one symmetric space toolkit.

#include "orbsmooth/acceptance.hpp"
#include "orbsmooth/dimension.hpp"
#include "orbsmooth/jacobi.hpp"
#include "orbsmooth/orbit_classifier.hpp"
#include "orbsmooth/plancherel.hpp"
#include "orbsmooth/radial_point.hpp"
#include "orbsmooth/report.hpp"
#include "orbsmooth/space_catalog.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace orbsmooth;

namespace {

// Bad input discovered after CLI11 parsing; reported like a parse error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpaceArgs {
    std::string space;
    std::optional<int> q;
};

struct Config {
    std::string format;
    std::string out;
    int threads = 1;
    double eps = kDefaultClassifyEps;

    SpaceArgs space;
    int max_q = 6;
    long n = 0;
    long n_max = 0;
    std::string t, t1, t2, t3;
    bool oracle = false;
    bool check_quadrature = false;
    std::string diagnosis_out;
    bool quick = false;
    bool full = false;
    std::string data_dir = ORBSMOOTH_DATA_DIR;
};

SymmetricSpace resolve_space(const SpaceArgs& a) {
    const auto family = parse_family(a.space);
    if (!family) throw UsageError("unknown space family '" + a.space + "' (expected AI, AII, AIII, BII, CII or FII)");
    try {
        return make_space(*family, a.q);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

RadialPoint resolve_point(const std::string& text, const char* flag) {
    try {
        return parse_radial_point(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

std::vector<RadialPoint> resolve_points(const Config& c) {
    std::vector<RadialPoint> pts = {resolve_point(c.t1, "--t1"), resolve_point(c.t2, "--t2")};
    if (!c.t3.empty()) pts.push_back(resolve_point(c.t3, "--t3"));
    return pts;
}

OutputFormat resolve_format(const Config& c, OutputFormat fallback, std::initializer_list<OutputFormat> allowed,
                            const char* command) {
    if (c.format.empty()) return fallback;
    const auto f = parse_output_format(c.format);
    if (!f) throw UsageError("--format must be one of text, json, csv");
    for (OutputFormat a : allowed)
        if (a == *f) return *f;
    throw UsageError(std::string(command) + " does not support --format " + c.format);
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void emit_json(std::ostream& os, const nlohmann::ordered_json& j) { os << j.dump(2) << '\n'; }

int run_catalog(const Config& c) {
    if (c.max_q < 3) throw UsageError("--max-q must be >= 3");
    const OutputFormat f =
        resolve_format(c, OutputFormat::Text, {OutputFormat::Text, OutputFormat::Json, OutputFormat::Csv}, "catalog");
    Output out(c.out);
    if (f == OutputFormat::Json) emit_json(out.stream(), catalog_json(c.max_q));
    else if (f == OutputFormat::Csv) out.stream() << catalog_csv(c.max_q);
    else out.stream() << catalog_text(c.max_q);
    return 0;
}

int run_spherical(const Config& c) {
    const SymmetricSpace s = resolve_space(c.space);
    const RadialPoint t = resolve_point(c.t, "--t");
    if (c.n < 0) throw UsageError("--n must be non-negative");
    if (c.oracle && c.n > kHypergeometricMaxDegree)
        throw UsageError("--oracle supports n <= " + std::to_string(kHypergeometricMaxDegree));
    const OutputFormat f = resolve_format(c, OutputFormat::Text, {OutputFormat::Text, OutputFormat::Json}, "spherical");
    const SphericalReport r = make_spherical_report(s, c.n, t, c.oracle);
    Output out(c.out);
    if (f == OutputFormat::Json) emit_json(out.stream(), spherical_json(r));
    else out.stream() << spherical_text(r);
    return 0;
}

int run_dims(const Config& c) {
    const SymmetricSpace s = resolve_space(c.space);
    if (c.n_max < 0) throw UsageError("--n-max must be non-negative");
    if (c.check_quadrature && c.n_max > kQuadratureMaxDegree)
        throw UsageError("--check-quadrature supports n-max <= " + std::to_string(kQuadratureMaxDegree));
    const OutputFormat f = resolve_format(c, OutputFormat::Csv, {OutputFormat::Csv, OutputFormat::Json}, "dims");
    const auto rows = make_dims_rows(s, c.n_max, c.check_quadrature);
    Output out(c.out);
    if (f == OutputFormat::Json) emit_json(out.stream(), dims_json(s, rows));
    else out.stream() << dims_csv(rows);
    return 0;
}

int run_classify(const Config& c) {
    const SymmetricSpace s = resolve_space(c.space);
    const auto pts = resolve_points(c);
    const OutputFormat f = resolve_format(c, OutputFormat::Json, {OutputFormat::Json, OutputFormat::Text}, "classify");
    const SmoothnessVerdict v =
        pts.size() == 2 ? decide_pair(s, pts[0], pts[1], c.eps) : decide_triple(s, pts[0], pts[1], pts[2], c.eps);
    Output out(c.out);
    if (f == OutputFormat::Json) emit_json(out.stream(), classify_json(s, pts, v));
    else out.stream() << classify_text(s, pts, v);
    return 0;
}

int run_norm(const Config& c) {
    const SymmetricSpace s = resolve_space(c.space);
    const auto pts = resolve_points(c);
    if (c.n_max < 1 || c.n_max > kMaxSeriesLength)
        throw UsageError("--n-max must lie in [1, " + std::to_string(kMaxSeriesLength) + "]");
    const OutputFormat f =
        resolve_format(c, OutputFormat::Csv, {OutputFormat::Csv, OutputFormat::Json, OutputFormat::Text}, "norm");
    SeriesSchedule schedule;
    schedule.n_max = c.n_max;
    schedule.threads = c.threads;
    const ConsistencyReport r = crosscheck(s, pts, schedule, c.eps);
    Output out(c.out);
    if (f == OutputFormat::Json) {
        emit_json(out.stream(), norm_json(s, pts, r));
    } else if (f == OutputFormat::Text) {
        out.stream() << norm_text(s, pts, r);
    } else {
        out.stream() << norm_csv(r.trace);
        if (c.diagnosis_out.empty()) {
            emit_json(std::cerr, diagnosis_json(r));
        } else {
            Output diag(c.diagnosis_out);
            emit_json(diag.stream(), diagnosis_json(r));
        }
    }
    return 0;
}

int run_verify(const Config& c) {
    const OutputFormat f = resolve_format(c, OutputFormat::Text, {OutputFormat::Text, OutputFormat::Json}, "verify");
    AcceptanceOptions opt;
    opt.tier = c.full ? Tier::Full : Tier::Quick;
    opt.data_dir = c.data_dir;
    opt.threads = c.threads;
    Output out(c.out);
    std::ostream& os = out.stream();
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    const auto results = run_acceptance(opt, [&](const CriterionResult& r) {
        if (f == OutputFormat::Text) os << format_result_line(r) << std::endl;
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["name"] = r.name;
        j["passed"] = r.passed;
        j["detail"] = r.detail;
        items.push_back(std::move(j));
    });
    int failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    if (f == OutputFormat::Json) {
        nlohmann::ordered_json doc;
        doc["tier"] = c.full ? "full" : "quick";
        doc["criteria"] = std::move(items);
        doc["passed"] = failed == 0;
        emit_json(os, doc);
    } else {
        os << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << '\n';
    }
    return failed == 0 ? 0 : 1;
}

void add_space_options(CLI::App* cmd, Config& c) {
    cmd->add_option("--space", c.space.space, "Space family: AI, AII, AIII, BII, CII or FII")->required();
    cmd->add_option("--q", c.space.q, "Family parameter for AIII, BII and CII");
}

}  // namespace

int main(int argc, char** argv) {
    Config c;
    CLI::App app{"Spherical functions, dimensions and L1/L2 smoothness of orbital measure products "
                 "on rank-one compact symmetric spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", c.format, "Output format: text, json or csv");
    app.add_option("--out", c.out, "Write the main output to this file");
    app.add_option("--threads", c.threads, "Worker threads for series evaluation")->check(CLI::Range(1, 256));
    app.add_option("--eps", c.eps, "Classification tolerance in radians")
        ->check(CLI::Range(std::numeric_limits<double>::min(), kMaxClassifyEps));

    auto* catalog = app.add_subcommand("catalog", "List the catalog of rank-one spaces");
    catalog->add_option("--max-q", c.max_q, "Largest family parameter to list (default 6)");

    auto* spherical = app.add_subcommand("spherical", "Evaluate the spherical function phi_n at t");
    add_space_options(spherical, c);
    spherical->add_option("--n", c.n, "Degree n")->required();
    spherical->add_option("--t", c.t, "Radial point t = alpha(Z): radians or p/qpi")->required();
    spherical->add_flag("--oracle", c.oracle, "Cross-check against the hypergeometric form");

    auto* dims = app.add_subcommand("dims", "Dimensions of the spherical representations");
    add_space_options(dims, c);
    dims->add_option("--n-max", c.n_max, "Largest degree")->required();
    dims->add_flag("--check-quadrature", c.check_quadrature, "Compare with the quadrature oracle (n-max <= 50)");

    auto* classify = app.add_subcommand("classify", "Classify points and decide L1/L2 of the product");
    add_space_options(classify, c);
    classify->add_option("--t1", c.t1, "Point 1: radians or p/qpi")->required();
    classify->add_option("--t2", c.t2, "Point 2: radians or p/qpi")->required();
    classify->add_option("--t3", c.t3, "Optional point 3: radians or p/qpi");

    auto* norm = app.add_subcommand("norm", "Sum and diagnose the Plancherel series of the product");
    add_space_options(norm, c);
    norm->add_option("--t1", c.t1, "Point 1: radians or p/qpi")->required();
    norm->add_option("--t2", c.t2, "Point 2: radians or p/qpi")->required();
    norm->add_option("--t3", c.t3, "Optional point 3: radians or p/qpi");
    norm->add_option("--n-max", c.n_max, "Number of terms")->required();
    norm->add_option("--diagnosis-out", c.diagnosis_out, "File for the JSON diagnosis in CSV mode (default stderr)");

    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    auto* quick = verify->add_flag("--quick", c.quick, "Desk-scale tier, N_max = 1e5 (default)");
    verify->add_flag("--full", c.full, "Full tier, N_max = 1e6")->excludes(quick);
    verify->add_option("--data-dir", c.data_dir, "Directory holding catalog_reference.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (catalog->parsed()) return run_catalog(c);
        if (spherical->parsed()) return run_spherical(c);
        if (dims->parsed()) return run_dims(c);
        if (classify->parsed()) return run_classify(c);
        if (norm->parsed()) return run_norm(c);
        if (verify->parsed()) return run_verify(c);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
