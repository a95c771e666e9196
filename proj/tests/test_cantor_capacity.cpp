#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rcap/cantor.hpp"
#include "rcap/capacity.hpp"

using namespace rcap;

TEST_CASE("closed-interval scheme sequences") {
    auto s = CantorScheme::closed_interval(0.5);
    CHECK(s.d(0) == 1.0);
    CHECK(s.d(3) == doctest::Approx(0.015625).epsilon(1e-15)); // 4^-3
    // e_n = d_n (1 - 2^{a*/(a*-1)}) = d_n / 2 for a* = 1/2
    CHECK(s.e(2) == doctest::Approx(s.d(2) / 2.0).epsilon(1e-13));
    s.validate(50);
    CHECK_THROWS_AS(CantorScheme::closed_interval(1.5), std::invalid_argument);
    CHECK_THROWS_AS(CantorScheme::closed_interval(1.0), std::invalid_argument);
}

TEST_CASE("open-interval scheme splice") {
    auto s = CantorScheme::open_interval(0.5);
    // n0 = min{n >= 2 : a* > 1/sqrt(n)} = 5 for a* = 1/2
    CHECK(s.splice_index() == 5);
    // alpha_5 = sqrt(5)(1-a*)/(sqrt(5)-1), d_5 = 2^{-5/alpha_5}
    double a5 = std::sqrt(5.0) * 0.5 / (std::sqrt(5.0) - 1.0);
    CHECK(s.d(5) == doctest::Approx(std::exp2(-5.0 / a5)).epsilon(1e-13));
    CHECK(s.d(0) == doctest::Approx(1.0).epsilon(1e-13));
    s.validate(40);
    // prefix: e_n = s_growth * d_{n+1} > 0 with 2 + s_growth = d_5^{-1/5}
    double growth = std::pow(s.d(5), -0.2);
    CHECK(s.e(2) == doctest::Approx((growth - 2.0) * s.d(3)).epsilon(1e-10));
}

TEST_CASE("logarithmic scheme sequences") {
    auto s = CantorScheme::logarithmic();
    CHECK(s.d(2) == doctest::Approx(1.0 / 27.0).epsilon(1e-15));
    CHECK(s.d(0) == 1.0);
    s.validate(100);
}

TEST_CASE("level arcs") {
    auto s = CantorScheme::closed_interval(0.5);
    auto arcs = arcs_at_level(s, 3);
    CHECK(arcs.arcs().size() == 8);
    CHECK(arcs.measure() == doctest::Approx(8.0 * 0.015625));
    // level arcs nest
    auto coarse = arcs_at_level(s, 2);
    for (const auto& a : arcs.arcs()) CHECK(coarse.contains_angle(0.5 * (a.start + a.end)));
    // relocation maps [0,1] onto the base arc
    auto rel = arcs_at_level(s.relocated(0.25, 0.5), 1);
    CHECK(rel.arcs()[0].start == doctest::Approx(0.25));
    CHECK(rel.measure() == doctest::Approx(0.5 * 2.0 * s.d(1)));
}

TEST_CASE("capacity verdict table for the closed scheme") {
    auto s = CantorScheme::closed_interval(0.5);
    // terms of the lower series scale like 2^{n (a - a*)/(1 - a*)}
    auto c04 = cantor_capacity_bounds(s, KernelOrder(0.4), 800);
    auto c05 = cantor_capacity_bounds(s, KernelOrder(0.5), 800);
    auto c06 = cantor_capacity_bounds(s, KernelOrder(0.6), 800);
    CHECK(c04.verdict == CapacityVerdict::ZeroCertified);
    CHECK(c05.verdict == CapacityVerdict::ZeroCertified);
    CHECK(c06.verdict == CapacityVerdict::PositiveCertified);
    CHECK(c06.cap_lower_bound > 0.0);
    CHECK(c06.cap_upper_bound < std::numeric_limits<double>::infinity());
    CHECK(c06.cap_lower_bound <= c06.cap_upper_bound);
}

TEST_CASE("closed scheme exact lower terms at the critical order") {
    auto s = CantorScheme::closed_interval(0.5);
    auto cert = cantor_capacity_bounds(s, KernelOrder(0.5), 1000);
    REQUIRE(cert.lower_series_partial.size() == 1000);
    CHECK(cert.lower_series_partial[0] == 0.5);
    CHECK(cert.lower_series_partial[999] == 500.0);
}

TEST_CASE("upper series closed form at alpha 0.75") {
    auto s = CantorScheme::closed_interval(0.5);
    auto cert = cantor_capacity_bounds(s, KernelOrder(0.75), 200);
    REQUIRE(cert.upper_finite);
    double exact = std::pow(2.0, 0.25) / (1.0 - std::pow(2.0, -0.5));
    CHECK(cert.upper_series_value == doctest::Approx(exact).epsilon(1e-12));
    CHECK(cert.cap_lower_bound == doctest::Approx(1.0 / exact).epsilon(1e-12));
}

TEST_CASE("logarithmic scheme needs deep series for alpha near 1") {
    auto s = CantorScheme::logarithmic();
    auto c = cantor_capacity_bounds(s, KernelOrder(0.9), 2000);
    CHECK(c.verdict == CapacityVerdict::ZeroCertified);
    auto c1 = cantor_capacity_bounds(s, KernelOrder(1.0), 200);
    CHECK(c1.verdict == CapacityVerdict::PositiveCertified);
    CHECK(c1.cap_lower_bound > 0.0);
}

TEST_CASE("custom scheme guards") {
    // d not decreasing
    auto bad = CantorScheme::custom([](long) { return 0.0; });
    CHECK_THROWS(bad.validate(2));
    // e_n <= 0: d_{n+1} = d_n / 2 exactly
    auto tight = CantorScheme::custom([](long n) { return -double(n); });
    CHECK_THROWS(tight.log2_e(1));
    CHECK_THROWS(cantor_capacity_bounds(CantorScheme::logarithmic(), KernelOrder(0.5), 0));
}
