#include "doctest.h"

#include <cmath>

#include "qcat/dynamics.hpp"

using namespace qcat;

TEST_CASE("fixed points of the double well map") {
    for (double K : {0.0, 0.04, 0.3, 1.5}) {
        MapParams params(K, 1.6, 6);
        for (double sign : {1.0, -1.0}) {
            PhasePoint pt{0.0, sign * 1.6};
            for (int t = 0; t < 100; ++t) pt = classical_step(pt, params);
            CHECK(pt.p == 0.0);
            CHECK(pt.x == doctest::Approx(sign * 1.6).epsilon(1e-15));
        }
    }
}

TEST_CASE("K = 0 free rotation conserves momentum") {
    MapParams params(0.0, 1.6, 6);
    PhasePoint pt{0.5, 0.0};
    pt = classical_step(pt, params);
    CHECK(pt.p == 0.5);
    CHECK(pt.x == doctest::Approx(0.5));
    for (int t = 0; t < 1000; ++t) pt = classical_step(pt, params);
    CHECK(pt.p == 0.5);
}

TEST_CASE("direct substitution example") {
    MapParams params(0.04, 1.6, 6);
    PhasePoint pt{0.0, 1.0};
    pt = classical_step(pt, params);
    // dV/dx(1) = 4*(1 - 2.56) = -6.24, p' = 0.2496, x' = 1.2496
    CHECK(pt.p == doctest::Approx(0.2496).epsilon(1e-12));
    CHECK(pt.x == doctest::Approx(1.2496).epsilon(1e-12));
}

TEST_CASE("x stays in (-pi, pi]") {
    MapParams params(0.3, 0.5, 6);
    PhasePoint pt{2.7, 3.0};
    for (int t = 0; t < 10000; ++t) {
        pt = classical_step(pt, params);
        CHECK(pt.x > -pi);
        CHECK(pt.x <= pi);
    }
}

TEST_CASE("parity: orbit from (-p,-x) mirrors orbit from (p,x)") {
    MapParams params(0.04, 1.6, 6);
    PhasePoint a{0.2, 0.7};
    PhasePoint b{-0.2, -0.7};
    for (int t = 0; t < 5000; ++t) {
        a = classical_step(a, params);
        b = classical_step(b, params);
        CHECK(a.p == doctest::Approx(-b.p).epsilon(1e-12));
        // x = pi and x = -pi are the same point on the circle
        if (std::abs(a.x - pi) > 1e-9) {
            CHECK(a.x == doctest::Approx(-b.x).epsilon(1e-12));
        }
    }
}

TEST_CASE("regular island start stays bounded for 1e5 iterations") {
    MapParams params(0.04, 1.6, 6);
    PhasePoint pt{0.0, 1.5};
    for (int t = 0; t < 100000; ++t) {
        pt = classical_step(pt, params);
        REQUIRE(std::abs(pt.x - 1.6) < 0.6);
        REQUIRE(std::abs(pt.p) < 0.6);
    }
}

TEST_CASE("poincare section reduces p for display and keeps orbit identity") {
    MapParams params(0.04, 1.6, 6);
    const auto orbits = poincare_section({{0.0, 1.6}, {0.5, 0.0}}, params, 500);
    REQUIRE(orbits.size() == 2);
    REQUIRE(orbits[0].size() == 500);
    for (const auto& pt : orbits[0]) {
        CHECK(pt.p == 0.0);
        CHECK(pt.x == doctest::Approx(1.6));
    }
    for (const auto& pt : orbits[1]) {
        CHECK(pt.p > -pi);
        CHECK(pt.p <= pi);
        CHECK(pt.x > -pi);
        CHECK(pt.x <= pi);
    }
    CHECK_THROWS_AS(poincare_section({{0.0, 1.0}}, params, 0), std::invalid_argument);
}

TEST_CASE("determinism: identical inputs give bitwise identical orbits") {
    MapParams params(0.05, 1.5, 6);
    const auto a = poincare_section({{0.3, 0.1}}, params, 2000);
    const auto b = poincare_section({{0.3, 0.1}}, params, 2000);
    for (std::size_t t = 0; t < a[0].size(); ++t) {
        CHECK(a[0][t].p == b[0][t].p);
        CHECK(a[0][t].x == b[0][t].x);
    }
}
