#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "cuspvol/errors.hpp"
#include "cuspvol/volume.hpp"

using namespace cuspvol;

namespace {

const double L3 = oracle::lobachevsky(kPi / 3.0);
const double L4 = oracle::lobachevsky(kPi / 4.0);

}  // namespace

TEST_CASE("orthoscheme examples") {
    CHECK(std::abs(vol_orthoscheme({kPi / 3.0, kPi / 3.0, false}) - 0.042289) < 1e-6);
    CHECK(std::abs(vol_orthoscheme({kPi / 3.0, kPi / 4.0, false}) - 0.076330) < 1e-6);
    CHECK(std::abs(vol_orthoscheme({kPi / 5.0, kPi / 3.0, false}) - 0.171502) < 1e-6);
    CHECK(vol_orthoscheme({kPi / 7.0, kPi / 3.0, true}) > 0.317811);
    CHECK(vol_orthoscheme({kPi / 15.0, kPi / 6.0, true}) > 0.416491);
    for (const auto& [a, b] : std::vector<std::pair<double, double>>{{kPi / 3, kPi / 3}, {kPi / 5, kPi / 3}, {kPi / 7, kPi / 3}}) {
        const bool t = a + b < kPi / 2.0;
        CHECK(std::abs(vol_orthoscheme({a, b, t}) - oracle::orthoscheme(a, b)) < 1e-12);
    }
}

TEST_CASE("orthoscheme domain errors") {
    CHECK_THROWS_AS(vol_orthoscheme({0.0, kPi / 3.0, false}), DomainError);
    CHECK_THROWS_AS(vol_orthoscheme({kPi / 2.0, kPi / 3.0, false}), DomainError);
    CHECK_THROWS_AS(vol_orthoscheme({kPi / 7.0, kPi / 3.0, false}), DomainError);
    CHECK_THROWS_AS(vol_orthoscheme({kPi / 3.0, kPi / 3.0, true}), DomainError);
    CHECK_NOTHROW(vol_orthoscheme({kPi / 4.0, kPi / 4.0, false}));
}

TEST_CASE("ideal tetrahedron examples") {
    CHECK(std::abs(vol_ideal_tetrahedron({kPi / 3, kPi / 3, kPi / 3}) - 1.014942) < 1e-6);
    const double v = vol_ideal_tetrahedron({kPi / 2, kPi / 4, kPi / 4});
    CHECK(std::abs(v - 2.0 * L4) < 1e-12);
    CHECK(std::abs(v - 0.915966) < 1e-6);
    CHECK(std::abs(v - omega3() / 4.0) < 1e-12);
    CHECK_THROWS_AS(vol_ideal_tetrahedron({kPi / 2, kPi / 2, 0.0}), ValidationError);
    CHECK_THROWS_AS(vol_ideal_tetrahedron({1.0, 1.0, 1.0}), ValidationError);
}

TEST_CASE("constants") {
    CHECK(std::abs(mu3() - 3.0 * L3) < 1e-12);
    CHECK(std::abs(mu3() - 1.014942) < 1e-6);
    CHECK(std::abs(omega3() - 3.663862) < 1e-6);
    CHECK(std::abs(v_star() - 0.171502) < 1e-6);
    CHECK(std::abs(d3_infinity() - 0.853276) < 1e-6);
}

TEST_CASE("catalog examples") {
    const auto& a = vol_named("[5,3,6]");
    CHECK(std::abs(a.value - 0.171502) < 1e-6);
    CHECK(a.cusps == 1);
    CHECK(a.arithmetic == Arithmeticity::NonArithmetic);
    const auto& b = vol_named("[(3^3,6)]");
    CHECK(std::abs(b.value - 0.364107) < 1e-6);
    CHECK(std::abs(b.value - (5.0 / 8.0 * L3 + L4 / 3.0)) < 1e-12);
    CHECK(b.cusps == 2);
    CHECK(b.arithmetic == Arithmeticity::NonArithmetic);
    const auto& c = vol_named("[3,3,6]");
    CHECK(std::abs(c.value - L3 / 8.0) < 1e-12);
    CHECK(c.cusps == 1);
    CHECK(c.arithmetic == Arithmeticity::Arithmetic);
    CHECK_THROWS_AS(vol_named("[9,9,9]"), NotFoundError);
    CHECK_THROWS_AS(vol_named(""), NotFoundError);
}

TEST_CASE("catalog holds the required entries") {
    const std::vector<std::pair<std::string, double>> required{
        {"[3,4,4]", L4 / 6.0},
        {"[inf,3,6,inf]", 1.25 * L3},
        {"[3,6,3]", mu3() / 6.0},
        {"[6,3,6]:commensurable", 3.0 / 8.0 * L3},
        {"[4,3,6]", 5.0 / 16.0 * L3},
        {"[(3,4^3)]:half", 0.27814},
        {"[5,3,6]:manifold-bound", 120.0 * v_star()},
        {"[(3^3,6)]:manifold-bound", 24.0 * (5.0 / 8.0 * L3 + L4 / 3.0)},
    };
    for (const auto& [symbol, expected] : required) {
        const auto& e = vol_named(symbol);
        CHECK_MESSAGE(std::abs(e.value - expected) < 1e-5, symbol);
    }
    CHECK(std::abs(vol_named("[inf,3,6,inf]").value - 0.42289) < 1e-5);
    CHECK(std::abs(vol_named("[5,3,6]:manifold-bound").value - 20.580199) < 1e-6);
    CHECK(std::abs(vol_named("[(3^3,6)]:manifold-bound").value - 8.738570) < 1e-6);
}

TEST_CASE("property: catalog closed forms agree with their decimals") {
    for (const auto& e : catalog()) {
        const double tol = 0.5 * std::pow(10.0, -e.decimal_places) + 1e-12;
        CHECK_MESSAGE(std::abs(e.value - e.decimal) <= tol, e.symbol);
    }
}

TEST_CASE("property: cone decomposition reproduces the catalogued tetrahedra") {
    for (const auto& s : noncompact_tetrahedra()) {
        const auto& e = vol_named(s);
        CHECK_MESSAGE(std::abs(vol_coxeter_tetrahedron(parse_coxeter_symbol(s)) - e.value) < 1e-9, s);
        CHECK_MESSAGE(e.cusps.has_value(), s);
        CHECK_MESSAGE(e.arithmetic.has_value(), s);
    }
}

TEST_CASE("property: dissection identities") {
    CHECK(std::abs(mu3() - 24.0 * vol_orthoscheme({kPi / 3, kPi / 3, false})) < 1e-9);
    CHECK(std::abs(omega3() - 48.0 * vol_orthoscheme({kPi / 3, kPi / 4, false})) < 1e-9);
}

TEST_CASE("property: family closed forms match the orthoscheme formula") {
    for (int k = 7; k <= 30; ++k) {
        const double a = kPi / k;
        CHECK(std::abs(family_volume_pi3(k) - vol_orthoscheme({a, kPi / 3, true})) < 1e-9);
        CHECK(std::abs(family_volume_pi3(k) - oracle::orthoscheme(a, kPi / 3)) < 1e-9);
    }
    for (int k = 4; k <= 30; ++k) {
        const double a = kPi / k;
        CHECK(std::abs(family_volume_pi6(k) - vol_orthoscheme({a, kPi / 6, a + kPi / 6 < kPi / 2 - kRegimeTol})) < 1e-9);
        CHECK(std::abs(family_volume_pi6(k) - oracle::orthoscheme(a, kPi / 6)) < 1e-9);
    }
}

TEST_CASE("property: the pi/3 family tends to the pyramid") {
    CHECK(std::abs(family_volume_pi3(1e6) - 1.25 * L3) < 1e-6);
}

TEST_CASE("Schlafli monotonicity examples") {
    std::vector<double> grid3;
    for (int k = 7; k >= 5; --k) grid3.push_back(kPi / k);
    CHECK(schlafli_monotonicity_check(kPi / 3, grid3));
    const std::vector<double> single{kPi / 3};
    CHECK(schlafli_monotonicity_check(kPi / 3, single));
    std::vector<double> grid6;
    for (int k = 15; k >= 5; --k) grid6.push_back(kPi / k);
    CHECK(schlafli_monotonicity_check(kPi / 6, grid6, true));
    const std::vector<double> unsorted{kPi / 5, kPi / 7};
    CHECK_THROWS_AS(schlafli_monotonicity_check(kPi / 3, unsorted), DomainError);
    const std::vector<double> mixed{kPi / 7, kPi / 5};
    CHECK_THROWS_AS(schlafli_monotonicity_check(kPi / 3, mixed, true), DomainError);
}

TEST_CASE("property: Schlafli monotonicity on the two truncated families") {
    std::vector<double> grid3;
    for (int k = 60; k >= 7; --k) grid3.push_back(kPi / k);
    CHECK(schlafli_monotonicity_check(kPi / 3, grid3, true));
    std::vector<double> grid6;
    for (int k = 60; k >= 4; --k) grid6.push_back(kPi / k);
    CHECK(schlafli_monotonicity_check(kPi / 6, grid6, true));
}

TEST_CASE("property: ideal tetrahedron symmetric under permutations") {
    const double a = 0.4, b = 1.1, c = kPi - 1.5;
    const double v = vol_ideal_tetrahedron({a, b, c});
    CHECK(std::abs(vol_ideal_tetrahedron({b, a, c}) - v) < 1e-14);
    CHECK(std::abs(vol_ideal_tetrahedron({c, b, a}) - v) < 1e-14);
    CHECK(std::abs(vol_ideal_tetrahedron({b, c, a}) - v) < 1e-14);
    CHECK(vol_ideal_tetrahedron({kPi / 3, kPi / 3, kPi / 3}) > v);
}

TEST_CASE("catalog JSON carries the documented keys") {
    const auto j = catalog_json();
    REQUIRE(j.is_array());
    for (const auto& e : j)
        for (const char* key : {"symbol", "closed_form", "decimal", "cusps", "arithmetic"}) CHECK(e.contains(key));
}
