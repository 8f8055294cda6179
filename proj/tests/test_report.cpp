#include "orbsmooth/acceptance.hpp"
#include "orbsmooth/report.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace orbsmooth;

TEST_CASE("catalog json has six family blocks") {
    const auto j = catalog_json(6);
    REQUIRE(j["families"].size() == 6);
    const char* order[] = {"AI", "AII", "AIII", "BII", "CII", "FII"};
    std::size_t total = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(j["families"][i]["family"] == order[i]);
        total += j["families"][i]["spaces"].size();
    }
    CHECK(total == list_catalog(6).size());
    const auto& fii = j["families"][5]["spaces"][0];
    CHECK(fii["m_alpha"] == 8);
    CHECK(fii["m_2alpha"] == 7);
    CHECK(fii["dim_gk"] == 16);
    CHECK(fii["a"] == 7.0);
    CHECK(fii["q"].is_null());
    CHECK(j["families"][3]["spaces"][0]["q"] == 3);
}

TEST_CASE("catalog csv matches the checked-in table") {
    std::ifstream in(std::string(ORBSMOOTH_DATA_DIR) + "/catalog_reference.csv", std::ios::binary);
    REQUIRE(in);
    std::stringstream ref;
    ref << in.rdbuf();
    CHECK(catalog_csv(6) == ref.str());
}

TEST_CASE("dims csv for SU(2)/SO(2)") {
    const auto rows = make_dims_rows(make_space(Family::AI), 3, false);
    CHECK(dims_csv(rows) == "n,dim,quadrature_dim,rel_err\n0,1,,\n1,3,,\n2,5,,\n3,7,,\n");
    const auto checked = make_dims_rows(make_space(Family::AIII, 2), 4, true);
    CHECK(dims_csv(checked).find("3,64,64,") != std::string::npos);
    CHECK_THROWS(make_dims_rows(make_space(Family::AI), 51, true));
}

TEST_CASE("classify json") {
    const SymmetricSpace s = make_space(Family::AIII, 2);
    const std::vector<RadialPoint> pts = {RadialPoint::pi_multiple(1, 2), RadialPoint::pi_multiple(1, 2)};
    const auto j = classify_json(s, pts, decide_pair(s, pts[0], pts[1]));
    CHECK(j["l1"] == true);
    CHECK(j["l2"] == false);
    CHECK(j["case_fired"] == "critical_none_regular");
    CHECK(j["dim_sum"] == 4);
    CHECK(j["dim_gk"] == 4);
    CHECK(j["classes"][0]["kind"] == "ContinuousNonRegular");
    CHECK(j["classes"][0]["t"]["input"] == "1/2pi");
}

TEST_CASE("spherical report") {
    const auto r = make_spherical_report(make_space(Family::AI), 1, RadialPoint::pi_multiple(1, 2), true);
    CHECK(r.value == 0.0);
    REQUIRE(r.hypergeometric.has_value());
    CHECK(std::abs(*r.hypergeometric) < 1e-15);
    const auto j = spherical_json(r);
    CHECK(j.contains("oracle"));
    CHECK(j["prefactor"] == 1.0);
}

TEST_CASE("norm outputs") {
    const SymmetricSpace s = make_space(Family::AIII, 2);
    const std::vector<RadialPoint> pts = {RadialPoint::radians(0.7), RadialPoint::pi_multiple(1, 2)};
    SeriesSchedule schedule;
    schedule.n_max = 10000;
    const ConsistencyReport r = crosscheck(s, pts, schedule);
    const std::string csv = norm_csv(r.trace);
    CHECK(csv.rfind("N,S_N,block_mean\n10,", 0) == 0);
    const auto d = diagnosis_json(r);
    for (const char* key : {"verdict", "tail_exponent", "log_slope", "r_squared", "closed_form_l2", "agree"})
        CHECK(d.contains(key));
    CHECK(norm_json(s, pts, r)["checkpoints"].size() == r.trace.checkpoints.size());
}

TEST_CASE("number formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1e300) == "1e+300");
    CHECK(format_double(-2.0) == "-2");
    CHECK(parse_output_format("csv") == OutputFormat::Csv);
    CHECK_FALSE(parse_output_format("xml").has_value());
}

TEST_CASE("acceptance report lines") {
    CriterionResult r;
    r.id = 3;
    r.name = "normalization";
    r.passed = true;
    r.detail = "ok";
    r.seconds = 1.25;
    CHECK(format_result_line(r) == "PASS [03] normalization: ok");
    CHECK(acceptance_criteria().size() == 13);
    CHECK_THROWS(run_criterion(14, {}));
    AcceptanceOptions opt;
    opt.data_dir = ORBSMOOTH_DATA_DIR;
    CHECK(run_criterion(1, opt).passed);
    opt.data_dir = "/nonexistent";
    CHECK_FALSE(run_criterion(1, opt).passed);
}
