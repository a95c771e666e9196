#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rcap/arcs.hpp"
#include "rcap/kernel.hpp"
#include "rcap/measure.hpp"

using namespace rcap;

TEST_CASE("kernel values and domain") {
    CHECK(kernel_eval(KernelOrder(0.5), 0.25) == doctest::Approx(2.0));
    CHECK(kernel_eval(KernelOrder(1.0), 1.0) == doctest::Approx(std::log(2.0)));
    CHECK(kernel_eval(KernelOrder(1.0), 2.5) == 0.0); // log^+ clips
    CHECK_THROWS_AS(kernel_eval(KernelOrder(0.5), 0.0), std::domain_error);
    CHECK_THROWS_AS(KernelOrder(0.0), std::invalid_argument);
    CHECK_THROWS_AS(KernelOrder(1.5), std::invalid_argument);
}

TEST_CASE("log-argument kernel matches direct evaluation") {
    for (double a : {0.3, 0.7, 1.0})
        for (double t : {1e-8, 0.03, 0.9}) {
            CHECK(kernel_eval_log2(KernelOrder(a), std::log2(t)) ==
                  doctest::Approx(kernel_eval(KernelOrder(a), t)).epsilon(1e-12));
            CHECK(kernel_eval_log2_scaled(KernelOrder(a), std::log2(t), 3.0) ==
                  doctest::Approx(kernel_eval(KernelOrder(a), t) / 8.0).epsilon(1e-12));
        }
}

TEST_CASE("gautschi ratio bracket") {
    for (long k : {1L, 2L, 10L, 1000L})
        for (double b : {0.25, 0.5, 0.9}) {
            double r = gautschi_ratio(k, b);
            CHECK(r > std::pow(double(k), 1.0 - b));
            CHECK(r < std::pow(double(k + 1), 1.0 - b));
        }
}

TEST_CASE("real lower constant") {
    CHECK(real_lower_constant(0.5) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(real_lower_constant(0.9) == doctest::Approx(1.0 / std::cos(0.05 * M_PI)).epsilon(1e-14));
    CHECK(real_lower_constant(0.999999) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("binomial series coefficient") {
    // c_1 = Gamma(2-a)/Gamma(1-a) = 1-a
    CHECK(binomial_series_coeff(1, 0.5) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(binomial_series_coeff(0, 0.3) == 1.0);
    // k=2: (1-a)(2-a)/2
    CHECK(binomial_series_coeff(2, 0.25) == doctest::Approx(0.75 * 1.75 / 2.0).epsilon(1e-13));
}

TEST_CASE("chord distances") {
    CHECK(chord_distance(0.0, 0.5) == doctest::Approx(2.0));
    CHECK(chord_distance(0.0, 0.25) == doctest::Approx(std::sqrt(2.0)));
    CHECK(chord_of_span(1.0 / 6.0) == doctest::Approx(1.0)); // hexagon side
    CHECK(circular_distance(0.95, 0.05) == doctest::Approx(0.1));
}

TEST_CASE("arc set normalization and measure") {
    ArcSet s({{0.8, 1.1}, {0.1, 0.3}});
    CHECK(s.arcs().size() == 2);
    CHECK(s.measure() == doctest::Approx(0.5));
    CHECK(s.contains_angle(0.05)); // 0.8..1.1 wraps over 0
    CHECK(s.contains_angle(0.2));
    CHECK(!s.contains_angle(0.5));
    CHECK(ArcSet::full_circle().covers_circle());
    CHECK(ArcSet::point(0.25).measure() == 0.0);

    // merging of touching arcs
    ArcSet t({{0.1, 0.2}, {0.2, 0.3}});
    CHECK(t.arcs().size() == 1);
}

TEST_CASE("arc set json round trip") {
    ArcSet s({{0.1, 0.3}, {0.6, 0.7}});
    ArcSet r = ArcSet::from_json(s.to_json());
    REQUIRE(r.arcs().size() == s.arcs().size());
    for (std::size_t i = 0; i < s.arcs().size(); ++i) {
        CHECK(r.arcs()[i].start == s.arcs()[i].start);
        CHECK(r.arcs()[i].end == s.arcs()[i].end);
    }
}

TEST_CASE("distance to arcs") {
    ArcSet s({{0.0, 0.25}});
    CHECK(dist_to_arcs(0.5 * circle_point(0.125), s) == doctest::Approx(0.5));
    CHECK(dist_to_arcs(circle_point(0.5), s) ==
          doctest::Approx(std::abs(circle_point(0.5) - circle_point(0.25))));
}

TEST_CASE("complementary arcs") {
    ArcSet s({{0.1, 0.2}, {0.5, 0.6}});
    auto gaps = complementary_arcs(s);
    REQUIRE(gaps.size() == 2);
    double total = 0.0;
    for (const auto& g : gaps) total += g.length();
    CHECK(total == doctest::Approx(1.0 - s.measure()));
}

TEST_CASE("measure invariants") {
    CHECK_THROWS_AS(DiscreteMeasure({0.5}, {0.1}, {0.9}), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteMeasure({0.5}, {0.0}, {1.0}), std::invalid_argument);
    auto mu = DiscreteMeasure::uniform_circle(8);
    CHECK(mu.size() == 8);
    CHECK(fourier_coefficient(mu, 0) == std::complex<double>(1.0, 0.0));
    // uniform measure kills every nonzero mode
    for (long k : {1L, 3L, 17L}) CHECK(std::abs(fourier_coefficient(mu, k)) < 1e-15);
}

TEST_CASE("fourier coefficient of a single arc") {
    // arc centered at 0 of length l: mu^(k) = sin(pi k l)/(pi k l), real
    DiscreteMeasure mu({0.0}, {0.2}, {1.0});
    auto c = fourier_coefficient(mu, 2);
    CHECK(c.real() == doctest::Approx(std::sin(0.4 * M_PI) / (0.4 * M_PI)).epsilon(1e-14));
    CHECK(std::abs(c.imag()) < 1e-15);
}
