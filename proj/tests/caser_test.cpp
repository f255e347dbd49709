#include <chrono>
#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "cuspvol/caser.hpp"
#include "cuspvol/errors.hpp"
#include "cuspvol/volume.hpp"

using namespace cuspvol;

namespace {

const double s2 = std::sqrt(2.0);
const double s3 = std::sqrt(3.0);

const Report& full_report() {
    static const Report r = run_case_analysis();
    return r;
}

const ScenarioSolution& row(const std::string& id) {
    for (const auto& r : full_report().rows)
        if (r.id == id) return r;
    throw NotFoundError(id);
}

}  // namespace

TEST_CASE("registry covers all 23 groups with unique ids") {
    const auto& rows = scenario_registry();
    std::set<int> groups;
    std::set<std::string> ids;
    for (const auto& s : rows) {
        groups.insert(s.group);
        CHECK_MESSAGE(ids.insert(s.id).second, s.id);
        CHECK_MESSAGE(!s.description.empty(), s.id);
    }
    for (int g = 1; g <= 23; ++g) CHECK_MESSAGE(groups.contains(g), g);
    CHECK(rows.size() >= 23);
    CHECK_THROWS_AS(find_scenario("99"), NotFoundError);
}

TEST_CASE("coverage checklist maps every topic to registry rows") {
    std::set<int> groups;
    for (const auto& s : scenario_registry()) groups.insert(s.group);
    std::set<int> covered;
    for (const auto& t : coverage_topics()) {
        CHECK_MESSAGE(!t.groups.empty(), t.topic);
        for (int g : t.groups) {
            CHECK_MESSAGE(groups.contains(g), t.topic);
            covered.insert(g);
        }
    }
    for (int g = 1; g <= 23; ++g) CHECK_MESSAGE(covered.contains(g), g);
}

TEST_CASE("row 7: aligned tangent (1/d)-balls realise [5,3,6]") {
    const auto& r = row("07");
    REQUIRE(r.d.has_value());
    CHECK(std::abs(*r.d - 2.0 * std::cos(kPi / 5.0)) < 1e-9);
    CHECK(std::abs(*r.d - (2.0 / *r.d + 1.0 / (*r.d * *r.d))) < 1e-12);
    CHECK(r.verdict == Verdict::RealizedBy);
    CHECK(r.witness == "[5,3,6]");
    CHECK(std::abs(r.value - 0.171502) < 1e-6);
    CHECK(r.cusp_volume == doctest::Approx(s3 * *r.d * *r.d / 48.0));
}

TEST_CASE("row 9: (1/w)-balls at a3") {
    const auto& r = row("09");
    REQUIRE(r.d.has_value());
    REQUIRE(r.theta.has_value());
    CHECK(std::abs(*r.d - std::pow(7.0, 0.25)) < 1e-6);
    CHECK(std::abs(std::cos(*r.theta) - 5.0 / (2.0 * std::sqrt(7.0))) < 1e-9);
    const double d = oracle::bisect(
        [](double x) {
            const double w = std::sqrt(3.0) / x;
            const double c = (x * x + 1.0 / (x * x) - w * w) / 2.0;
            const double t = std::acos(c);
            return 1.0 / (w * w * x * x * x * x) - (1.0 / (x * x) + 1.0 / (w * w) - 2.0 * std::cos(kPi / 6.0 - t) / (w * x));
        },
        1.55, 1.65);
    CHECK(std::abs(d - *r.d) < 1e-9);
    CHECK(r.cusp_volume == doctest::Approx(std::sqrt(21.0) / 24.0).epsilon(1e-12));
    CHECK(r.value > 0.19);
    CHECK(r.verdict == Verdict::ExcludedVolume);
}

TEST_CASE("row 12: bisector chain") {
    const auto& r = row("12a");
    REQUIRE(r.d.has_value());
    CHECK(std::abs(*r.d - std::sqrt(1.0 + s3)) < 1e-9);
    CHECK(std::abs(*r.d - 1.652892) < 1e-6);
    CHECK(r.verdict == Verdict::ExcludedVolume);
}

TEST_CASE("row 20: (1/w)-balls at the square centre") {
    const auto& r = row("20");
    REQUIRE(r.d.has_value());
    REQUIRE(r.theta.has_value());
    CHECK(std::abs(*r.d - std::pow(5.0, 0.25)) < 1e-9);
    CHECK(std::abs(std::cos(*r.theta) - 2.0 / std::sqrt(5.0)) < 1e-9);
    CHECK(r.cusp_volume == doctest::Approx(std::sqrt(5.0) / 8.0).epsilon(1e-12));
    CHECK(r.verdict == Verdict::ExcludedVolume);
}

TEST_CASE("scenario constants") {
    const std::map<std::string, double> expected{
        {"06", std::pow(3.0, 0.25)},  {"10b", s3},          {"12a", std::sqrt(1.0 + s3)},
        {"17a", std::pow(2.0, 0.25)}, {"20", std::pow(5.0, 0.25)}, {"21b", std::sqrt(1.0 + s2)},
    };
    for (const auto& [id, d] : expected) {
        const auto& r = row(id);
        REQUIRE_MESSAGE(r.d.has_value(), id);
        CHECK_MESSAGE(std::abs(*r.d - d) < 1e-6, id);
    }
}

TEST_CASE("verdicts by group") {
    CHECK(row("01a").verdict == Verdict::ExcludedArithmetic);
    for (const char* id : {"01b", "01c", "01d"}) CHECK(row(id).verdict == Verdict::ExcludedVolume);
    for (const char* id : {"05a", "05b", "05c", "06", "10b", "16a", "16b"})
        CHECK_MESSAGE(row(id).verdict == Verdict::ExcludedArithmetic, id);
    for (const char* id : {"13", "18b"}) CHECK_MESSAGE(row(id).verdict == Verdict::Impossible, id);
    for (const auto& r : full_report().rows)
        if (r.cusp_type == "3,3,3") CHECK_MESSAGE(r.verdict != Verdict::RealizedBy, r.id);
}

TEST_CASE("closed form and bisection agree on every row that has both") {
    for (const auto& r : full_report().rows)
        if (r.d_closed && r.d_bisection) CHECK_MESSAGE(std::abs(*r.d_closed - *r.d_bisection) < 1e-9, r.id);
}

TEST_CASE("verdicts follow from volumes and arithmeticity") {
    for (const auto& r : full_report().rows) {
        if (r.verdict == Verdict::ExcludedArithmetic) {
            REQUIRE_MESSAGE(!r.witness.empty(), r.id);
            CHECK_MESSAGE(is_arithmetic(parse_coxeter_symbol(r.witness)) == Arithmeticity::Arithmetic, r.id);
        }
        if (r.verdict == Verdict::ExcludedVolume) CHECK_MESSAGE(r.value > r.threshold, r.id);
        if (r.verdict == Verdict::RealizedBy) {
            CHECK(r.id == "07");
            CHECK(is_arithmetic(parse_coxeter_symbol(r.witness)) == Arithmeticity::NonArithmetic);
        }
        CHECK_MESSAGE(r.verdict != Verdict::Unresolved, r.id);
    }
}

TEST_CASE("monotone exclusion: bounds at the thresholds already exceed v*") {
    for (const auto& r : full_report().rows) {
        const bool threshold_row = r.id.starts_with("11-k") || r.id == "11-tail" || r.id == "11-dmid" ||
                                   r.id == "11-dbig" || r.group == 14 || r.group == 15 || r.group == 19 ||
                                   r.group == 22 || r.group == 23;
        if (!threshold_row || r.verdict != Verdict::ExcludedVolume) continue;
        CHECK_MESSAGE(r.margin > 0.0, r.id);
    }
}

TEST_CASE("full run certifies the minimum") {
    const auto start = std::chrono::steady_clock::now();
    const Report r = run_case_analysis();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(r.certified);
    CHECK(r.failures.empty());
    REQUIRE(r.minimum.has_value());
    CHECK(std::abs(*r.minimum - 0.171502) < 1e-6);
    CHECK(std::abs(*r.minimum - v_star()) < 1e-12);
    CHECK(r.argmin == "two-1d-tangent-aligned/[5,3,6]");
    CHECK(r.argmin_id == "07");
    CHECK(seconds < 10.0);
    CHECK(std::is_sorted(r.rows.begin(), r.rows.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
}

TEST_CASE("filtered runs") {
    const Report r244 = run_case_analysis({std::string("2,4,4"), {}});
    CHECK_FALSE(r244.rows.empty());
    for (const auto& row : r244.rows) {
        CHECK(row.cusp_type == "2,4,4");
        CHECK(row.verdict != Verdict::RealizedBy);
    }
    CHECK(r244.certified);
    CHECK_FALSE(r244.full_run);

    const Report arith = run_case_analysis({std::string("arithmetic"), {}});
    for (const auto& row : arith.rows) CHECK(row.verdict == Verdict::ExcludedArithmetic);
    const Report full = run_case_analysis();
    CHECK(*full.minimum < 0.2);
    if (arith.minimum) CHECK(arith.argmin_id != "07");

    CHECK_THROWS_AS(run_case_analysis({std::string("2,3,7"), {}}), ValidationError);
}

TEST_CASE("corrupted fixtures fail certification") {
    const auto run = [](const char* text) { return run_case_analysis({std::nullopt, nlohmann::json::parse(text)}); };
    CHECK_FALSE(run(R"({"rows": {"09": {"exact_volume": 0.1}}})").certified);
    CHECK_FALSE(run(R"({"rows": {"07": {"witness": "[3,3,6]"}}})").certified);
    CHECK_FALSE(run(R"({"rows": {"07": {"d_closed": 1.7}}})").certified);
    CHECK(run(R"({"rows": {}})").certified);
    CHECK_THROWS_AS(run(R"({"rows": {"zz": {"witness": "[3,3,6]"}}})"), NotFoundError);
    CHECK_THROWS_AS(run(R"({"rows": {"07": {"colour": 1}}})"), ValidationError);
    CHECK_THROWS_AS(run(R"([1, 2])"), ValidationError);
}

TEST_CASE("thresholds") {
    std::map<std::string, Threshold> t;
    for (const auto& x : scenario_thresholds()) t[x.name] = x;
    CHECK(std::abs(t["density-bound"].closed - 2.013813) < 1e-6);
    CHECK(std::abs(t["density-bound-oriented"].closed - 1.423982) < 1e-6);
    CHECK(std::abs(t["w-at-least-one"].closed - 1.515464) < 1e-6);
    CHECK(std::abs(t["order3-tangency"].closed - 1.324718) < 1e-6);
    CHECK(std::abs(t["ptolemy-244"].closed - 1.450405) < 1e-6);
    for (const auto& [name, x] : t) CHECK_MESSAGE(std::abs(x.closed - x.bisection) < 1e-9, name);
    const double cubic = oracle::bisect([](double d) { return d * d * d - d - 1.0; }, 1.0, 2.0);
    CHECK(std::abs(cubic - t["order3-tangency"].closed) < 1e-9);
    const double ptolemy = oracle::bisect([](double d) { return d * d * d - std::sqrt(2.0) * d - 1.0; }, 1.0, 2.0);
    CHECK(std::abs(ptolemy - t["ptolemy-244"].closed) < 1e-9);
}

TEST_CASE("identity B is reported with both decimals") {
    const auto ids = verify_appendix_identities();
    REQUIRE(ids.size() == 2);
    const auto& b = ids[1];
    CHECK(std::abs(b.lhs - 0.457983) < 1e-6);
    CHECK(std::isfinite(b.residual));
    REQUIRE(b.decimal_matches.size() == 2);
    CHECK(b.decimal_matches[0].first == 0.457983);
    CHECK(b.decimal_matches[1].first == 0.45983);
    CHECK(b.decimal_matches[0].second);
    CHECK_FALSE(b.decimal_matches[1].second);
    CHECK_FALSE(b.notes.empty());
}

TEST_CASE("identity A left-hand side") {
    const auto ids = verify_appendix_identities();
    CHECK(std::abs(ids[0].lhs - 0.338314) < 1e-6);
    CHECK(std::abs(std::cos(ids[0].theta) - 5.0 / (2.0 * std::sqrt(7.0))) < 1e-12);
}

TEST_CASE("report JSON shape") {
    const auto j = report_json(full_report());
    for (const char* key : {"rows", "minimum", "argmin"}) CHECK(j.contains(key));
    for (const auto& r : j["rows"])
        for (const char* key : {"id", "cusp_type", "classes", "placement", "d", "theta", "cusp_volume", "volume_bound",
                                "verdict", "paper_ref", "notes"})
            CHECK_MESSAGE(r.contains(key), key);
    CHECK(j["argmin"] == "two-1d-tangent-aligned/[5,3,6]");
}
