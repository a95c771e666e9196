#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "rcap/carleson.hpp"
#include "rcap/energy.hpp"
#include "rcap/outer.hpp"
#include "rcap/threshold.hpp"

using namespace rcap;

TEST_CASE("boundary factor phi_E") {
    ArcSet two_points({{0.0, 0.0}, {0.5, 0.5}}); // {1, -1}
    CHECK(boundary_factor(two_points, 0.25) == doctest::Approx(2.0).epsilon(1e-14)); // zeta = i
    CHECK(boundary_factor(two_points, 0.75) == doctest::Approx(2.0).epsilon(1e-14)); // zeta = -i
    CHECK(boundary_factor(two_points, 0.0) == 0.0);
    // point arcs double their endpoint, squaring the chord factor
    CHECK(boundary_factor(ArcSet::point(0.0), 0.5) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("outer function for a one-point set is (1-z)^2N") {
    OuterFunctionSpec spec{ArcSet::point(0.0), 1.0};
    CHECK(std::abs(outer_eval(spec, 0.0) - 1.0) < 1e-6);
    CHECK(std::abs(outer_eval(spec, -0.5) - 2.25) < 1e-5);
    spec.power = 2.0;
    CHECK(std::abs(outer_eval(spec, 0.5) - 0.0625) < 1e-5);
    // a genuinely complex point
    std::complex<double> z(0.3, 0.4);
    CHECK(std::abs(outer_eval(spec, z) - std::pow(1.0 - z, 4.0)) < 1e-5);
    CHECK_THROWS_AS(outer_eval(spec, std::complex<double>(1.0, 0.5)), std::invalid_argument);
}

TEST_CASE("measure transform basics") {
    auto uniform = DiscreteMeasure::uniform_circle(64);
    // only the constant Fourier mode survives
    CHECK(std::abs(f_alpha_mu_eval(uniform, 0.5, std::complex<double>(0.2, 0.3)) - 1.0) < 1e-10);
    DiscreteMeasure mu({0.1}, {0.05}, {1.0});
    CHECK(std::abs(f_alpha_mu_eval(mu, 0.7, 0.0) - 1.0) < 1e-12);
    // series coefficients: point mass at 1 has c_1 = Gamma(1.5)/Gamma(0.5) = 1/2
    DiscreteMeasure point_mass({0.0}, {1e-12}, {1.0});
    auto s = f_alpha_mu_series(point_mass, 0.5, 4);
    CHECK(std::abs(s.coefficients[1] - 0.5) < 1e-10);
    auto su = f_alpha_mu_series(uniform, 0.5, 4);
    CHECK(std::abs(su.coefficients[0] - 1.0) < 1e-14);
    for (int k = 1; k <= 4; ++k) CHECK(std::abs(su.coefficients[k]) < 1e-14);
}

TEST_CASE("measure transform: series and quadrature agree") {
    DiscreteMeasure mu = DiscreteMeasure::uniform_on_arcs(ArcSet({{0.95, 1.02}}), 2);
    for (double a : {0.3, 0.5, 0.9}) {
        auto s = f_alpha_mu_series(mu, a, 60);
        for (std::complex<double> z : {std::complex<double>(0.3, 0.0),
                                       std::complex<double>(0.1, -0.25),
                                       std::complex<double>(-0.2, 0.2)}) {
            CHECK(std::abs(s.eval(z) - f_alpha_mu_eval(mu, a, z)) < 1e-8);
        }
    }
}

TEST_CASE("measure transform inequalities on random points") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    DiscreteMeasure mu = DiscreteMeasure::uniform_on_arcs(ArcSet({{0.0, 0.08}, {0.3, 0.42}}), 2);
    ArcSet supp = mu.support();
    double C = real_lower_constant(0.5);
    for (int i = 0; i < 500; ++i) {
        std::complex<double> z = std::polar(0.999 * std::sqrt(unif(rng)), 2.0 * M_PI * unif(rng));
        double a = 0.5 + 0.45 * unif(rng);
        auto v = f_alpha_mu_eval(mu, a, z);
        CHECK(v.real() > 0.0); // Lemma (gamma)
        double d = dist_to_arcs(z, supp);
        if (d > 1e-6) CHECK(std::abs(v) <= std::pow(d, a - 1.0) * (1.0 + 1e-9)); // Lemma (beta)
    }
    // Lemma (delta) discrete analogue: at r -> 1 the real part dominates the
    // potential up to the constant C
    for (double t : {0.55, 0.8}) { // off-support boundary points
        double a = 0.6;
        double pot = potential_at(mu, KernelOrder(a), t);
        double re = f_alpha_mu_eval(mu, a, (1.0 - 1e-6) * circle_point(t)).real();
        CHECK(re >= pot / C - 1e-6);
    }
}

TEST_CASE("harmonic measure closed forms") {
    ArcSet half({{0.1, 0.6}});
    CHECK(harmonic_measure(0.0, half) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(harmonic_measure(0.0, ArcSet::full_circle()) == 1.0);
    CHECK(harmonic_measure(std::complex<double>(0.3, -0.2), ArcSet::point(0.25)) == 0.0);
    // deep inside an arc the measure approaches 1
    ArcSet arc({{0.2, 0.4}});
    CHECK(harmonic_measure(0.99 * circle_point(0.3), arc) >= 0.9);
    // complement rule
    ArcSet gaps(complementary_arcs(arc));
    std::complex<double> z(0.1, 0.55);
    CHECK(harmonic_measure(z, arc) + harmonic_measure(z, gaps) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("carleson integral") {
    CHECK(!carleson_integral(ArcSet::full_circle()).has_value());
    auto point = carleson_integral(ArcSet::point(0.0));
    REQUIRE(point.has_value());
    CHECK(std::fabs(*point) < 1e-6);
    // a fat arc keeps the complementary log-distance integral finite and positive
    auto arc = carleson_integral(ArcSet({{0.0, 0.5}}));
    REQUIRE(arc.has_value());
    CHECK(*arc > 0.0);
    // invariance under rotation
    auto rot = carleson_integral(ArcSet({{0.2, 0.7}}));
    CHECK(*rot == doctest::Approx(*arc).epsilon(1e-9));
}

TEST_CASE("dilation radius grid search") {
    auto constant = [](std::complex<double>) { return std::complex<double>(10.0, 0.0); };
    CHECK(dilation_radius(constant, 1.0, 1.0, {0.0, 0.25}) == 0.5); // first grid hit
    auto low = [](std::complex<double>) { return std::complex<double>(0.1, 0.0); };
    CHECK_THROWS_AS(dilation_radius(low, 1.0, 1.0, {0.0}, false, 1, 8), std::runtime_error);
    CHECK_THROWS_AS(dilation_radius(constant, 1.0, 1.0, {}), std::invalid_argument);
}
