#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "rcap/threshold.hpp"

using namespace rcap;

// building F is expensive; share one instance across the test cases
static const ThresholdFunction& built_F() {
    static ThresholdFunction F = build_threshold_F(1.0, 2);
    return F;
}

TEST_CASE("stable kernel power matches the naive formula away from the boundary") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        std::complex<double> z = std::polar(0.95 * unif(rng), 2.0 * M_PI * unif(rng));
        double eta = unif(rng);
        double a = 0.1 + 0.8 * unif(rng);
        auto naive = std::pow(1.0 - z * std::conj(circle_point(eta)), a - 1.0);
        CHECK(std::abs(measure_kernel_power(z, eta, a) - naive) < 1e-12 * std::abs(naive) + 1e-14);
    }
    // radial approach to the support: 1 - |z| is computed without cancellation
    double a = 0.5;
    double gap = std::ldexp(1.0, -40);
    std::complex<double> z(1.0 - gap, 0.0);
    auto v = measure_kernel_power(z, 0.0, a);
    CHECK(v.real() == doctest::Approx(std::pow(gap, a - 1.0)).epsilon(1e-12));
    CHECK(v.imag() == 0.0);
}

TEST_CASE("threshold build certificates") {
    const ThresholdFunction& F = built_F();
    REQUIRE(F.spec.caps.size() == 2);
    for (std::size_t n = 0; n < F.spec.caps.size(); ++n) {
        CHECK(F.spec.caps[n] <= std::pow(4.0, -double(n + 1)));
        CHECK(F.spec.caps[n] > 0.0);
    }
    CHECK(F.spec.r_seq[1] > F.spec.r_seq[0]);
    CHECK(F.spec.alpha_seq[1] > F.spec.alpha_seq[0]);
    CHECK(F.spec.alpha_seq[0] == doctest::Approx(0.5).epsilon(1e-15));
    // F(0) = sum of the caps, since each f_{alpha,mu}(0) = 1
    double total = 0.0;
    for (double c : F.spec.caps) total += c;
    CHECK(std::abs(F.eval(0.0) - total) < 1e-10);
    // positive real part on a coarse sweep of the disc
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        std::complex<double> z = std::polar(std::sqrt(unif(rng)), 2.0 * M_PI * unif(rng));
        CHECK(F.eval(z).real() > 0.0);
    }
}

TEST_CASE("threshold spec replay round trip") {
    const ThresholdFunction& F = built_F();
    auto j = F.spec.to_json();
    ThresholdFunction G = replay_threshold_F(ThresholdFunctionSpec::from_json(j));
    CHECK(G.spec.levels == F.spec.levels);
    CHECK(G.real_constant == F.real_constant);
    for (std::complex<double> z : {std::complex<double>(0.0, 0.0),
                                   std::complex<double>(0.4, 0.3),
                                   std::complex<double>(-0.9, 0.1)}) {
        CHECK(std::abs(G.eval(z) - F.eval(z)) < 1e-15);
    }
}

TEST_CASE("dilation rule holds on the certified sample") {
    const ThresholdFunction& F = built_F();
    for (std::size_t n = 0; n < F.measures.size(); ++n) {
        double target = 1.0 / (2.0 * F.real_constant * F.spec.caps[n]);
        double r = F.spec.r_seq[n];
        for (double t : F.sample_of(n)) {
            auto z = r * circle_point(t);
            CHECK(f_alpha_mu_eval(F.measures[n], F.spec.alpha_seq[n], z).real() >= target);
        }
    }
}

TEST_CASE("counterexample series agrees with direct evaluation") {
    const ThresholdFunction& F = built_F();
    CounterexampleFunction f = counterexample_f(F, 80);
    PowerSeries s = f.series();
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        std::complex<double> z = std::polar(0.5 * unif(rng), 2.0 * M_PI * unif(rng));
        CHECK(std::abs(s.eval(z) - f.eval(z)) < 1e-8);
        CHECK(std::abs(f.eval(z)) <= 1.0);
    }
    // exp recurrence sanity: F = c z gives g_k = e^{-0} (-c)^k / k!
    PowerSeries lin;
    lin.coefficients = {0.0, 2.0};
    CounterexampleFunction g;
    g.F_series = lin;
    auto gs = g.series();
    CHECK(std::abs(gs.coefficients[0] - 1.0) < 1e-15);
    CHECK(std::abs(gs.coefficients[1] + 2.0) < 1e-15);
}

TEST_CASE("build input guards") {
    CHECK_THROWS_AS(build_threshold_F(1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_threshold_F(1.0, 30, 3), std::runtime_error); // budget too small
}
