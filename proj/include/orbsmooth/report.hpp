#pragma once

// Rendering of computation results as JSON, CSV and plain text. The CLI is a
// thin layer over these functions; tests call them directly.

#include "orbsmooth/orbit_classifier.hpp"
#include "orbsmooth/plancherel.hpp"
#include "orbsmooth/space_catalog.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace orbsmooth {

enum class OutputFormat { Text, Json, Csv };

std::optional<OutputFormat> parse_output_format(std::string_view s);

// Shortest round-trip decimal form of a double.
std::string format_double(double v);

// ---- catalog --------------------------------------------------------------
nlohmann::ordered_json catalog_json(int max_q);
std::string catalog_csv(int max_q);
std::string catalog_text(int max_q);

// ---- spherical ------------------------------------------------------------
struct SphericalReport {
    std::string space;
    long n = 0;
    RadialPoint point;
    double value = 0.0;
    double prefactor = 1.0;
    double prefactor_log = 0.0;
    std::optional<double> hypergeometric;  // set with --oracle
};

SphericalReport make_spherical_report(const SymmetricSpace& space, long n, const RadialPoint& point,
                                      bool with_oracle);
nlohmann::ordered_json spherical_json(const SphericalReport& r);
std::string spherical_text(const SphericalReport& r);

// ---- dims -----------------------------------------------------------------
struct DimsRow {
    long n = 0;
    double dim = 1.0;
    std::optional<double> quadrature_dim;
    std::optional<double> rel_err;
};

std::vector<DimsRow> make_dims_rows(const SymmetricSpace& space, long n_max, bool check_quadrature);
std::string dims_csv(const std::vector<DimsRow>& rows);
nlohmann::ordered_json dims_json(const SymmetricSpace& space, const std::vector<DimsRow>& rows);

// ---- classify -------------------------------------------------------------
nlohmann::ordered_json classify_json(const SymmetricSpace& space, const std::vector<RadialPoint>& points,
                                     const SmoothnessVerdict& v);
std::string classify_text(const SymmetricSpace& space, const std::vector<RadialPoint>& points,
                          const SmoothnessVerdict& v);

// ---- norm -----------------------------------------------------------------
std::string norm_csv(const SeriesTrace& trace);
nlohmann::ordered_json diagnosis_json(const ConsistencyReport& r);
nlohmann::ordered_json norm_json(const SymmetricSpace& space, const std::vector<RadialPoint>& points,
                                 const ConsistencyReport& r);
std::string norm_text(const SymmetricSpace& space, const std::vector<RadialPoint>& points,
                      const ConsistencyReport& r);

}  // namespace orbsmooth
