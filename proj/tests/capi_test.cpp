#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "cuspvol/cuspvol.h"

namespace {

std::string take(char* s) {
    std::string out(s);
    cv_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("status names and last error") {
    CHECK(std::strcmp(cv_status_name(CV_OK), "ok") == 0);
    double x = 0.0;
    CHECK(cv_parse_angle("pi/", &x) == CV_ERR_PARSE);
    CHECK(std::strlen(cv_last_error()) > 0);
    CHECK(cv_parse_angle("pi/3", &x) == CV_OK);
    CHECK(std::strlen(cv_last_error()) == 0);
    CHECK(cv_parse_angle(nullptr, &x) == CV_ERR_NULL_ARGUMENT);
    CHECK(cv_parse_angle("pi", nullptr) == CV_ERR_NULL_ARGUMENT);
}

TEST_CASE("Lobachevsky and constants") {
    double v = 0.0;
    long terms = 0;
    double err = 1.0;
    REQUIRE(cv_lob(M_PI / 3.0, 0.0, &v, &terms, &err) == CV_OK);
    CHECK(std::abs(v - 0.338314) < 1e-6);
    CHECK(terms > 0);
    CHECK(err <= 1e-12);
    CHECK(cv_lob(NAN, 0.0, &v, nullptr, nullptr) == CV_ERR_DOMAIN);
    REQUIRE(cv_lob_integral(M_PI / 4.0, 0.0, &v) == CV_OK);
    CHECK(std::abs(v - 0.457983) < 1e-6);
    REQUIRE(cv_mu3(&v) == CV_OK);
    CHECK(std::abs(v - 1.014942) < 1e-6);
    REQUIRE(cv_omega3(&v) == CV_OK);
    CHECK(std::abs(v - 3.663862) < 1e-6);
    REQUIRE(cv_v_star(&v) == CV_OK);
    CHECK(std::abs(v - 0.171502) < 1e-6);
    REQUIRE(cv_d3_infinity(&v) == CV_OK);
    CHECK(std::abs(v - 0.853276) < 1e-6);
}

TEST_CASE("volumes") {
    double v = 0.0;
    REQUIRE(cv_vol_orthoscheme(M_PI / 3.0, M_PI / 3.0, 0, &v) == CV_OK);
    CHECK(std::abs(v - 0.042289) < 1e-6);
    CHECK(cv_vol_orthoscheme(M_PI / 7.0, M_PI / 3.0, 0, &v) == CV_ERR_DOMAIN);
    REQUIRE(cv_vol_ideal_tetrahedron(M_PI / 3.0, M_PI / 3.0, M_PI / 3.0, &v) == CV_OK);
    CHECK(std::abs(v - 1.014942) < 1e-6);
    CHECK(cv_vol_ideal_tetrahedron(1.0, 1.0, 1.0, &v) == CV_ERR_VALIDATION);
    char* text = nullptr;
    REQUIRE(cv_volume_json("[(3^3,6)]", &text) == CV_OK);
    const auto j = nlohmann::json::parse(take(text));
    CHECK(std::abs(j["value"].get<double>() - 0.364107) < 1e-6);
    CHECK(j["cusps"] == 2);
    CHECK(cv_volume_json("[5,3,", &text) == CV_ERR_PARSE);
    REQUIRE(cv_catalog_json(&text) == CV_OK);
    CHECK(nlohmann::json::parse(take(text)).size() > 23);
}

TEST_CASE("graph handles") {
    cv_graph* g = nullptr;
    REQUIRE(cv_graph_parse("[5,3,6]", &g) == CV_OK);
    int cusps = 0;
    REQUIRE(cv_graph_cusps(g, &cusps) == CV_OK);
    CHECK(cusps == 1);
    int arithmetic = 1;
    char* text = nullptr;
    REQUIRE(cv_graph_arithmeticity(g, &arithmetic, &text) == CV_OK);
    CHECK(arithmetic == 0);
    CHECK(nlohmann::json::parse(take(text))["offending_weight"] == 5);
    double v = 0.0;
    REQUIRE(cv_graph_volume(g, &v) == CV_OK);
    CHECK(std::abs(v - 0.171502) < 1e-6);
    REQUIRE(cv_graph_gram_json(g, &text) == CV_OK);
    const auto gram = nlohmann::json::parse(take(text));
    CHECK(gram["signature"] == "(3,1)");
    REQUIRE(cv_graph_json(g, &text) == CV_OK);
    const std::string graph_json = take(text);
    cv_graph* h = nullptr;
    REQUIRE(cv_graph_from_json(graph_json.c_str(), &h) == CV_OK);
    REQUIRE(cv_graph_symbol(h, &text) == CV_OK);
    CHECK(take(text) == "[5,3,6]");
    cv_graph_free(h);
    cv_graph_free(g);
    CHECK(cv_graph_parse("[2,3,6]", &g) == CV_ERR_VALIDATION);
    CHECK(cv_graph_from_json("{", &g) == CV_ERR_PARSE);
    CHECK(cv_graph_cusps(nullptr, &cusps) == CV_ERR_NULL_ARGUMENT);
}

TEST_CASE("certification handle") {
    cv_report* r = nullptr;
    REQUIRE(cv_certify(nullptr, nullptr, &r) == CV_OK);
    CHECK(cv_report_certified(r) == 1);
    double m = 0.0;
    REQUIRE(cv_report_minimum(r, &m) == CV_OK);
    CHECK(std::abs(m - 0.171502) < 1e-6);
    char* text = nullptr;
    REQUIRE(cv_report_json(r, &text) == CV_OK);
    CHECK(nlohmann::json::parse(take(text))["argmin"] == "two-1d-tangent-aligned/[5,3,6]");
    REQUIRE(cv_report_failures_json(r, &text) == CV_OK);
    CHECK(nlohmann::json::parse(take(text)).empty());
    cv_report_free(r);
    CHECK(cv_certify("9,9,9", nullptr, &r) == CV_ERR_VALIDATION);
    REQUIRE(cv_certify(nullptr, R"({"rows": {"07": {"witness": "[3,3,6]"}}})", &r) == CV_OK);
    CHECK(cv_report_certified(r) == 0);
    cv_report_free(r);
    CHECK(cv_report_certified(nullptr) == 0);
}

TEST_CASE("scenario, identity and threshold JSON") {
    char* text = nullptr;
    REQUIRE(cv_scenario_json("07", &text) == CV_OK);
    CHECK(nlohmann::json::parse(take(text))["verdict"] == "REALIZED_BY");
    CHECK(cv_scenario_json("nope", &text) == CV_ERR_NOT_FOUND);
    REQUIRE(cv_scenario_ids_json(&text) == CV_OK);
    CHECK(nlohmann::json::parse(take(text)).size() > 23);
    REQUIRE(cv_identities_json(&text) == CV_OK);
    CHECK(nlohmann::json::parse(take(text)).size() == 2);
    REQUIRE(cv_thresholds_json(&text) == CV_OK);
    CHECK(nlohmann::json::parse(take(text)).contains("density-bound"));
}

TEST_CASE("render through the C API") {
    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(cv_render_scenario("09", 1, 0, 0, 0.0, &a) == CV_OK);
    REQUIRE(cv_render_scenario("09", 1, 0, 0, 0.0, &b) == CV_OK);
    CHECK(take(a) == take(b));
    REQUIRE(cv_render("2,4,4", 1.2, "a4", 2, 400, 400, 80.0, &a) == CV_OK);
    CHECK(take(a).find("width=\"400\"") != std::string::npos);
    CHECK(cv_render("2,5,5", 1.2, "a4", 2, 0, 0, 0.0, &a) == CV_ERR_VALIDATION);
    CHECK(cv_render("2,3,6", 1.2, "a6", 9, 0, 0, 0.0, &a) == CV_ERR_VALIDATION);
    CHECK(cv_render_scenario("zz", 1, 0, 0, 0.0, &a) == CV_ERR_NOT_FOUND);
}
