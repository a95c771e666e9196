#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "rcap/dirichlet.hpp"

using namespace rcap;

TEST_CASE("series norm closed forms") {
    auto f = PowerSeries::from_real({1.0, 1.0});
    for (double a : {0.0, 0.5, 1.0}) {
        auto r = dnorm_series(f, a);
        CHECK(r.value == doctest::Approx(std::sqrt(1.0 + std::pow(2.0, a))).epsilon(1e-14));
        CHECK(!r.divergence_flag);
    }
    auto z3 = PowerSeries::monomial(3);
    CHECK(dnorm_series(z3, 0.5).value == doctest::Approx(std::pow(4.0, 0.25)).epsilon(1e-14));
}

TEST_CASE("divergence flag fires on non-summable truncations") {
    // a_k = (k+1)^{-1/2}: sum (k+1)^{2a} |a_k|^2 / ... at alpha = 0 the series
    // sum 1/(k+1) diverges, so doubling increments stay comparable
    std::vector<double> a(4096);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = 1.0 / std::sqrt(double(k + 1));
    auto r = dnorm_series(PowerSeries::from_real(a), 0.0);
    CHECK(r.divergence_flag);
    // same coefficients at alpha = -1 converge
    auto c = dnorm_series(PowerSeries::from_real(a), -1.0);
    CHECK(!c.divergence_flag);
}

TEST_CASE("area integral matches the monomial Beta closed form") {
    // f = z^k: int |f'|^2 (1-|z|^2)^{1-a} dA = k^2 pi B(k, 2-a)
    for (long k : {1L, 2L, 3L}) {
        for (double a : {0.5, 1.0}) {
            auto fprime = [k](std::complex<double> z) {
                return double(k) * std::pow(z, std::complex<double>(double(k - 1)));
            };
            double beta = std::exp(std::lgamma(double(k)) + std::lgamma(2.0 - a) -
                                   std::lgamma(double(k) + 2.0 - a));
            double oracle = double(k) * double(k) * M_PI * beta;
            CHECK(dnorm_area(fprime, a, 1e-9) == doctest::Approx(oracle).epsilon(1e-7));
        }
    }
}

TEST_CASE("opa distance closed forms") {
    auto f = PowerSeries::from_real({1.0, -1.0});
    auto r1 = opa_distance(f, 0.0, 1, 64);
    CHECK(r1.distance * r1.distance == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(r1.polynomial[0].real() == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(r1.polynomial[1].real() == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    // alpha = 0, f = 1-z: distance^2 at degree n is 1/(n+2)
    for (long n = 1; n <= 5; ++n) {
        auto r = opa_distance(f, 0.0, n, 64);
        CHECK(r.distance * r.distance == doctest::Approx(1.0 / double(n + 2)).epsilon(1e-12));
    }
    // f = z: no polynomial multiple approaches 1
    auto g = PowerSeries::from_real({0.0, 1.0});
    for (long n = 1; n <= 5; ++n)
        CHECK(opa_distance(g, 0.5, n, 64).distance == doctest::Approx(1.0).epsilon(1e-14));
    // f = 1: exact inverse
    CHECK(opa_distance(PowerSeries::from_real({1.0}), 0.7, 3, 8).distance ==
          doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("opa matches a least-squares oracle") {
    // minimize sum_m (m+1)^a |(pf)_m - delta_{m0}|^2 by weighted QR
    auto f = PowerSeries::from_real({1.0, -0.8, 0.3});
    double a = 0.7;
    long n = 3, M = 32;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(M + 1, n + 1);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(M + 1);
    for (long m = 0; m <= M; ++m) {
        double w = std::pow(double(m + 1), 0.5 * a);
        for (long j = 0; j <= n; ++j) {
            long k = m - j;
            if (k >= 0 && k <= f.truncation_degree()) A(m, j) = w * f.coefficients[k].real();
        }
        if (m == 0) b(m) = w;
    }
    Eigen::VectorXd p = A.colPivHouseholderQr().solve(b);
    double d2 = (A * p - b).squaredNorm();
    auto r = opa_distance(f, a, n, M);
    CHECK(r.distance * r.distance == doctest::Approx(d2).epsilon(1e-10));
    for (long j = 0; j <= n; ++j)
        CHECK(r.polynomial[j].real() == doctest::Approx(p(j)).epsilon(1e-8));
}

TEST_CASE("opa monotone in alpha and reports serialize") {
    auto f = PowerSeries::from_real({1.0, -1.0});
    auto reports = opa_sweep(f, {0.0, 0.5, 1.0}, {1, 2, 3}, 64);
    REQUIRE(reports.size() == 3);
    for (std::size_t i = 0; i + 1 < reports.size(); ++i)
        for (std::size_t j = 0; j < reports[i].distances.size(); ++j)
            CHECK(reports[i].distances[j] <= reports[i + 1].distances[j] + 1e-13);
    auto csv = opa_reports_csv(reports);
    CHECK(csv.rfind("alpha,degree,distance\n", 0) == 0);
    auto j = opa_reports_json(reports);
    CHECK(j.size() == 3);
    CHECK(j[0]["degrees"].size() == 3);
}

TEST_CASE("opa input guards") {
    auto f = PowerSeries::from_real({1.0, -1.0});
    CHECK_THROWS_AS(opa_distance(f, 0.0, 5, 4), std::invalid_argument); // M too small
    CHECK_THROWS_AS(opa_distance(PowerSeries::from_real({0.0}), 0.0, 1, 8), std::invalid_argument);
}
