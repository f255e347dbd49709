#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

#include "cuspvol/errors.hpp"
#include "cuspvol/horoball.hpp"
#include "cuspvol/volume.hpp"

using namespace cuspvol;

namespace {

const double s2 = std::sqrt(2.0);
const double s3 = std::sqrt(3.0);
const double golden = 2.0 * std::cos(kPi / 5.0);

}  // namespace

TEST_CASE("horoball records") {
    const auto inf = Horoball::at_infinity(1.0);
    CHECK_FALSE(inf.center.has_value());
    CHECK(Horoball::finite({0.0, 0.0}, 1.0).is_full_sized());
    CHECK_FALSE(Horoball::finite({0.0, 0.0}, 0.5).is_full_sized());
    CHECK_FALSE(inf.is_full_sized());
}

TEST_CASE("tangent centre distance") {
    CHECK(tangent_center_distance(0.5, 0.5) == doctest::Approx(1.0));
    CHECK(tangent_center_distance(0.5, 1.0 / (2.0 * golden * golden)) == doctest::Approx(1.0 / golden));
    CHECK(tangent_center_distance(1.0, 1.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(tangent_center_distance(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(tangent_center_distance(1.0, -1.0), DomainError);
}

TEST_CASE("image diameter") {
    const double d = 1.7;
    CHECK(image_diameter(1, 1, d) == doctest::Approx(1.0 / (d * d)));
    CHECK(image_diameter(1, 1, 1) == doctest::Approx(1.0));
    const double w = 1.3;
    CHECK(image_diameter(1.0 / (d * d), 1, w) == doctest::Approx(1.0 / (w * w * d * d)));
    CHECK_THROWS_AS(image_diameter(0, 1, 1), DomainError);
    CHECK_THROWS_AS(image_diameter(1, 1, 0), DomainError);
}

TEST_CASE("horoball transfer") {
    const auto a = horoball_transfer(1, 1, 1);
    CHECK(a.tangent);
    for (const auto& [name, value] : a.ratios) CHECK(value == doctest::Approx(1.0));
    const double delta0 = 0.7;
    const auto b = horoball_transfer(delta0, 1, delta0 * delta0);
    CHECK(b.tangent);
    CHECK(b.induced_distance == doctest::Approx(1.0 / delta0));
    CHECK(b.max_deviation < 1e-12);
    const auto c = horoball_transfer(2, 1, 1);
    CHECK_FALSE(c.tangent);
    CHECK(c.max_deviation > 0.5);
    CHECK(c.ratios.size() == 5);
    CHECK_THROWS_AS(horoball_transfer(0, 1, 1), DomainError);
}

TEST_CASE("uvw examples") {
    const double d = std::pow(7.0, 0.25);
    const double theta = std::acos(5.0 / (2.0 * std::sqrt(7.0)));
    CHECK(uvw(d, theta, CuspType::T236).w == doctest::Approx(s3 / d).epsilon(1e-12));
    CHECK(uvw(s3, 0.0, CuspType::T236).w == doctest::Approx(2.0 / s3).epsilon(1e-12));
    for (double x : {1.1, 1.5, 2.3}) CHECK(uvw(x, 0.0, CuspType::T236).w == doctest::Approx(std::abs(x - 1.0 / x)));
    CHECK_THROWS_AS(uvw(1.0, 0.1, CuspType::T236), DomainError);
    CHECK_THROWS_AS(uvw(1.5, kPi / 5.0, CuspType::T236), DomainError);
    CHECK_NOTHROW(uvw(1.5, kPi / 5.0, CuspType::T244));
    CHECK_NOTHROW(uvw(1.5, kPi / 3.0, CuspType::T236, kPi / 3.0));
    CHECK_THROWS_AS(uvw(1.5, -0.1, CuspType::T236), DomainError);
}

TEST_CASE("property: w^2 + 2cos(theta) - 1/d^2 = d^2") {
    for (int i = 1; i <= 20; ++i) {
        const double d = 1.0 + 0.1 * i;
        for (int j = 0; j <= 10; ++j) {
            const double theta = kPi / 6.0 * j / 10.0;
            const auto r = uvw(d, theta, CuspType::T236);
            CHECK(std::abs(r.w * r.w + 2.0 * std::cos(theta) - 1.0 / (d * d) - d * d) < 1e-12);
            CHECK(std::abs(r.u * r.u - (d * d + 3.0 / (d * d) - 2.0 * s3 * std::cos(kPi / 6.0 - theta))) < 1e-12);
            CHECK(std::abs(r.v * r.v - (d * d + 4.0 / (d * d) - 4.0 * std::cos(theta))) < 1e-12);
        }
    }
}

TEST_CASE("recursion examples") {
    const auto a = recursion_ds(golden, 1);
    REQUIRE(a.size() == 1);
    CHECK(std::abs(golden - 1.0 / a.back() - 1.0) < 1e-12);
    const auto b = recursion_ds(s3, 2);
    REQUIRE(b.size() == 2);
    CHECK(std::abs(1.0 / b.back() - s3 / 2.0) < 1e-12);
    const auto c = recursion_ds(2.0, 50);
    const double fixed = (2.0 + std::sqrt(4.0 - 4.0)) / 2.0;
    for (std::size_t k = 1; k < c.size(); ++k) CHECK(c[k] < c[k - 1]);
    for (double x : c) CHECK(x > fixed);
    CHECK(c.back() - fixed < 0.03);
    CHECK(recursion_ds(1.5, 0).empty());
    CHECK_THROWS_AS(recursion_ds(1.0, 5), InvalidRegime);
    CHECK_THROWS_AS(recursion_ds(-1.0, 2), DomainError);
    CHECK_THROWS_AS(recursion_ds(1.5, -1), DomainError);
}

TEST_CASE("end condition examples") {
    CHECK(d_from_end_condition(1, EndCase::B) == doctest::Approx(golden).epsilon(1e-14));
    CHECK(d_from_end_condition(2, EndCase::A) == doctest::Approx(s3).epsilon(1e-14));
    CHECK(d_from_end_condition(1, EndCase::A) == doctest::Approx(s2).epsilon(1e-14));
    CHECK_THROWS_AS(d_from_end_condition(-1, EndCase::A), DomainError);
}

TEST_CASE("property: Chebyshev closed forms satisfy the end conditions") {
    for (int k = 0; k <= 20; ++k) {
        for (EndCase c : {EndCase::A, EndCase::B}) {
            const double d = d_from_end_condition(k, c);
            const auto ds = recursion_ds(d, k);
            const double x = ds.empty() ? 0.0 : 1.0 / ds.back();
            const double residual = c == EndCase::A ? x - d / 2.0 : d - x - 1.0;
            CHECK(std::abs(residual) < 1e-9);
            CHECK(std::abs(end_condition_residual(d, k, c)) < 1e-9);
            CHECK(std::abs(d_from_end_condition_bisection(k, c) - d) < 1e-9);
        }
    }
}

TEST_CASE("property: bisection of d^6 - 2d^4 - 2d^2 + 1 gives 2cos(pi/5)") {
    const double root = oracle::bisect(
        [](double d) {
            const double x = d * d;
            return x * x * x - 2.0 * x * x - 2.0 * x + 1.0;
        },
        1.5, 2.0);
    CHECK(std::abs(root - golden) < 1e-9);
    CHECK(golden > 1.6);
}

TEST_CASE("property: the w >= 1 threshold") {
    const double sigma = std::sqrt(3.0 + s3);
    const double closed = (sigma + std::sqrt(sigma * sigma - 4.0)) / 2.0;
    CHECK(std::abs(closed - 1.515464) < 1e-6);
    const double root = oracle::bisect([](double d) { return d * d + 1.0 / (d * d) - 1.0 - std::sqrt(3.0); }, 1.1, 2.0);
    CHECK(std::abs(root - closed) < 1e-9);
}

TEST_CASE("bisector height examples") {
    CHECK(bisector_height(2.0, 0.0) == doctest::Approx(0.0));
    const double d = 2.013813;
    const double h0 = bisector_height(d, 0.0);
    CHECK(std::abs(bisector_height(d, 0.3) - h0) < 1e-12);
    CHECK(std::abs(bisector_height(d, 0.6) - h0) < 1e-12);
    CHECK(bisector_height(2.1, 0.5) == doctest::Approx(std::sqrt(2.1 * 2.1 / 4.0 - 1.0)));
    CHECK_THROWS_AS(bisector_height(1.9, 0.5), InvalidRegime);
}

TEST_CASE("property: bisector height does not depend on a") {
    for (double d : {2.0, 2.013813, 2.1, 2.5, 3.0}) {
        const double h = std::sqrt(d * d / 4.0 - 1.0);
        for (int i = 0; i < 100; ++i) CHECK(std::abs(bisector_height(d, 1.5 * i / 99.0) - h) < 1e-12);
    }
}

TEST_CASE("beta from d") {
    CHECK_THROWS_AS(beta_from_d(2.0), InvalidRegime);
    CHECK_THROWS_AS(beta_from_d(1.7), DomainError);
    CHECK(beta_from_d(2.013813) < kPi / 15.0);
    CHECK(beta_from_d(2.2) == doctest::Approx(std::acos(2.2 / (2.0 * std::sqrt(1.84)))));
}

TEST_CASE("cusp volume examples") {
    CHECK(cusp_volume(make_diagram(CuspType::T236, Placement::A6, 1.0, true)).value == doctest::Approx(s3 / 48.0));
    CHECK(cusp_volume(make_diagram(CuspType::T236, Placement::None, 1.0, false)).value ==
          doctest::Approx(0.269338).epsilon(1e-6));
    CHECK(cusp_volume(make_diagram(CuspType::T244, Placement::None, 1.0, false)).value == doctest::Approx(0.25));
    const double d = std::pow(5.0, 0.25);
    CHECK(cusp_volume(make_diagram(CuspType::T244, Placement::A4, d, false)).value ==
          doctest::Approx(std::sqrt(5.0) / 8.0).epsilon(1e-12));
}

TEST_CASE("cusp volume placement formulas") {
    const double d = 1.37;
    const auto v = [&](CuspType t, Placement p, bool mirror) { return cusp_volume(make_diagram(t, p, d, mirror)).value; };
    CHECK(v(CuspType::T236, Placement::A6, true) == doctest::Approx(s3 * d * d / 48.0));
    CHECK(v(CuspType::T236, Placement::A6, false) == doctest::Approx(s3 * d * d / 24.0));
    CHECK(v(CuspType::T236, Placement::A3, true) == doctest::Approx(s3 * d * d / 16.0));
    CHECK(v(CuspType::T236, Placement::A2, true) == doctest::Approx(s3 * d * d / 12.0));
    CHECK(v(CuspType::T244, Placement::A4, true) == doctest::Approx(d * d / 16.0));
    CHECK(v(CuspType::T244, Placement::A2, true) == doctest::Approx(d * d / 8.0));
    const auto pair = make_diagram(CuspType::T244, Placement::A4, d, true, Placement::A2, 2);
    CHECK(pair.tau == doctest::Approx(2.0 * d));
    CHECK(cusp_volume(pair).value == doctest::Approx(d * d / 4.0));
}

TEST_CASE("cusp volume rejects inconsistent diagrams") {
    auto g = make_diagram(CuspType::T236, Placement::A6, 1.2, true);
    g.tau = 2.0;
    CHECK_THROWS_AS(cusp_volume(g), ValidationError);
    CHECK_THROWS_AS(cusp_volume(make_diagram(CuspType::T236, Placement::A6, 0.9, true)), ValidationError);
    CHECK_THROWS_AS(make_diagram(CuspType::T236, Placement::A4, 1.2, true), ValidationError);
    CHECK_THROWS_AS(make_diagram(CuspType::T333, Placement::A3, 1.2, true), UnsupportedError);
    CHECK_THROWS_AS(make_diagram(CuspType::T236, Placement::A6, 1.2, true, Placement::A6, 2), ValidationError);
}

TEST_CASE("orbifold volume bound") {
    CHECK(min_orbifold_volume_bound(s3 / 48.0) == doctest::Approx(mu3() / 24.0).epsilon(1e-12));
    CHECK(std::abs(min_orbifold_volume_bound(s3 / 48.0) - 0.042289) < 1e-6);
    CHECK_THROWS_AS(min_orbifold_volume_bound(0.0), DomainError);
    const double b = min_orbifold_volume_bound(std::sqrt(21.0) / 24.0);
    CHECK(b > 0.19);
    CHECK(b > v_star());
}

TEST_CASE("property: density thresholds") {
    const auto bound = [](double factor) {
        return oracle::bisect(
            [factor](double d) { return std::sqrt(3.0) * d * d / (factor * d3_infinity()) - v_star(); }, 1.0, 3.0);
    };
    CHECK(std::abs(bound(48.0) - 2.013813) < 1e-5);
    CHECK(std::abs(bound(24.0) - 1.423982) < 1e-5);
}

TEST_CASE("two-class e from alpha") {
    CHECK(e_from_alpha(0.0) == doctest::Approx(s2));
    CHECK(e_from_alpha(kPi / 3.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(e_from_alpha(kPi / 2.0), DomainError);
}
