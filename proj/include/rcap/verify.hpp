#ifndef RCAP_VERIFY_HPP_
#define RCAP_VERIFY_HPP_

#include <chrono>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rcap/capacity.hpp"
#include "rcap/carleson.hpp"
#include "rcap/dirichlet.hpp"
#include "rcap/energy.hpp"
#include "rcap/equilibrium.hpp"
#include "rcap/fourier_energy.hpp"
#include "rcap/kernel.hpp"
#include "rcap/outer.hpp"
#include "rcap/threshold.hpp"

namespace rcap {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

namespace detail {

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

inline std::string fmt(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

} // namespace detail

/// Closed-interval scheme, alpha* = 0.5: lower-series partial sums are
/// exactly N/2, and at alpha = 0.75 the upper series hits its closed form.
inline CheckResult check_closed_scheme_series() {
    detail::Stopwatch sw;
    CantorScheme scheme = CantorScheme::closed_interval(0.5);
    auto cert = cantor_capacity_bounds(scheme, KernelOrder(0.5), 1000);
    bool exact = cert.lower_series_partial.size() == 1000;
    for (std::size_t n = 0; exact && n < cert.lower_series_partial.size(); ++n)
        exact = cert.lower_series_partial[n] == 0.5 * double(n + 1);

    auto cert75 = cantor_capacity_bounds(scheme, KernelOrder(0.75), 200);
    double upper_exact = std::pow(2.0, 0.25) / (1.0 - std::pow(2.0, -0.5));
    bool upper_ok = cert75.upper_finite &&
                    std::fabs(cert75.upper_series_value - upper_exact) <= 1e-9 &&
                    std::fabs(cert75.cap_lower_bound - 1.0 / upper_exact) <= 1e-9;
    double t = sw.seconds();
    bool pass = exact && upper_ok && t < 1.0;
    return {"closed scheme series",
            pass,
            "partials exactly N/2: " + std::string(exact ? "yes" : "no") +
                ", upper@0.75 = " + detail::fmt(cert75.upper_series_value) + " (expect " +
                detail::fmt(upper_exact) + "), cap lower = " + detail::fmt(cert75.cap_lower_bound) +
                ", " + detail::fmt(t) + " s"};
}

/// Logarithmic scheme: zero capacity certified below alpha = 1, positive
/// logarithmic capacity with the upper series under 3(n+2)log(n+2)/2^n.
inline CheckResult check_log_scheme_verdicts() {
    detail::Stopwatch sw;
    CantorScheme scheme = CantorScheme::logarithmic();
    bool zeros = true;
    std::string verdicts;
    for (double a : {0.3, 0.6, 0.9}) {
        auto cert = cantor_capacity_bounds(scheme, KernelOrder(a), 2000);
        zeros = zeros && cert.verdict == CapacityVerdict::ZeroCertified;
        verdicts += " " + to_string(cert.verdict);
    }
    auto cert1 = cantor_capacity_bounds(scheme, KernelOrder(1.0), 200);
    bool positive = cert1.verdict == CapacityVerdict::PositiveCertified;
    KahanSum bound;
    for (int n = 0; n < 200; ++n)
        bound.add(3.0 * double(n + 2) * std::log(double(n + 2)) * std::exp2(-double(n)));
    bool bounded = cert1.upper_finite && cert1.upper_series_value <= bound.value();
    double t = sw.seconds();
    bool pass = zeros && positive && bounded && t < 1.0;
    return {"log scheme verdicts", pass,
            "alpha {0.3,0.6,0.9}:" + verdicts + ", alpha 1: " + to_string(cert1.verdict) +
                ", upper " + detail::fmt(cert1.upper_series_value) + " <= bound " +
                detail::fmt(bound.value()) + ", " + detail::fmt(t) + " s"};
}

/// Full-circle equilibrium at alpha = 1 with 512 nodes.
inline CheckResult check_circle_equilibrium() {
    detail::Stopwatch sw;
    auto res = equilibrium(ArcSet::full_circle(), KernelOrder(1.0), 512, 1e-8);
    double wmax = 0.0;
    for (double w : res.measure.weights()) wmax = std::max(wmax, std::fabs(w - 1.0 / 512.0));
    double t = sw.seconds();
    bool pass = std::fabs(res.energy - std::log(2.0)) <= 2e-3 &&
                std::fabs(res.capacity_estimate - 1.4427) <= 5e-3 && res.frostman_gap <= 1e-8 &&
                wmax <= 1e-6 && t < 30.0;
    return {"circle equilibrium", pass,
            "energy " + detail::fmt(res.energy) + " (log 2 = " + detail::fmt(std::log(2.0)) +
                "), capacity " + detail::fmt(res.capacity_estimate) + ", gap " +
                detail::fmt(res.frostman_gap) + ", weight dev " + detail::fmt(wmax) + ", " +
                detail::fmt(t) + " s"};
}

/// Fourier energy sandwich on seeded random 4-arc measures:
/// lower <= quadrature energy <= sqrt(2) * lower at alpha1 = 0.5.
inline CheckResult check_fourier_energy_sandwich(unsigned seed) {
    detail::Stopwatch sw;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int violations = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        // four disjoint arcs with lengths and gaps at least 0.01 of a turn
        std::vector<double> pts(8);
        for (;;) {
            for (auto& p : pts) p = unif(rng);
            std::sort(pts.begin(), pts.end());
            bool ok = 1.0 - (pts[7] - pts[0]) >= 0.01;
            for (int i = 0; ok && i < 7; ++i) ok = pts[i + 1] - pts[i] >= 0.01;
            if (ok) break;
        }
        std::vector<Arc> arcs;
        for (int i = 0; i < 8; i += 2) arcs.push_back({pts[i], pts[i + 1]});
        DiscreteMeasure mu = DiscreteMeasure::uniform_on_arcs(ArcSet(std::move(arcs)), 4);
        for (double a : {0.5, 0.7, 0.9}) {
            // pick the truncation from the library's own tail bound
            double M = 0.0;
            for (std::size_t i = 0; i < mu.size(); ++i)
                M += mu.weights()[i] / (M_PI * mu.lengths()[i]);
            long terms = 1000 + long(std::ceil(std::pow(
                             M * M / (std::tgamma(1.0 - a) * (1.0 + a) * 5e-7), 1.0 / (1.0 + a))));
            auto [lo, hi] = energy_fourier_bounds(mu, KernelOrder(a), KernelOrder(0.5), terms);
            double en = energy(mu, KernelOrder(a), 2e-5);
            double tol = 1e-4 * std::max(1.0, en);
            if (!(lo <= en + tol && en <= hi + tol)) ++violations;
            worst = std::max({worst, lo - en, en - hi});
        }
    }
    double t = sw.seconds();
    bool pass = violations == 0;
    return {"fourier energy sandwich", pass,
            std::to_string(violations) + " violations over 300 cases, worst excess " +
                detail::fmt(worst) + ", " + detail::fmt(t) + " s"};
}

/// Pointwise real-part inequality 1/|1-z conj(eta)|^{1-a} <= sqrt(2) *
/// Re (1-z conj(eta))^{a-1} for alpha in [0.5, 1].
inline CheckResult check_real_part_inequality(unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        double r = std::sqrt(unif(rng));
        std::complex<double> z = std::polar(r, 2.0 * M_PI * unif(rng));
        std::complex<double> eta = std::polar(1.0, 2.0 * M_PI * unif(rng));
        double a = 0.5 + 0.5 * unif(rng);
        std::complex<double> w = 1.0 - z * std::conj(eta);
        double lhs = std::pow(std::abs(w), a - 1.0);
        double rhs = std::sqrt(2.0) * (std::pow(w, std::complex<double>(a - 1.0))).real();
        if (!(lhs <= rhs)) ++violations;
    }
    return {"real part inequality", violations == 0,
            std::to_string(violations) + " violations over 10000 samples"};
}

/// OPA distances: closed forms for 1-z and z, monotonicity in alpha.
inline CheckResult check_opa_distances() {
    detail::Stopwatch sw;
    PowerSeries f = PowerSeries::from_real({1.0, -1.0});
    bool oracle_ok = true, third = false;
    for (long n = 1; n <= 5; ++n) {
        auto r = opa_distance(f, 0.0, n, 64);
        // brute-force oracle: G p = b assembled independently below
        // (alpha = 0: G is the (n+1)x(n+1) tridiagonal 2/-1 matrix)
        Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n + 1, n + 1);
        for (long j = 0; j <= n; ++j) {
            G(j, j) = 2.0;
            if (j + 1 <= n) {
                G(j, j + 1) = -1.0;
                G(j + 1, j) = -1.0;
            }
        }
        Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 1);
        b(0) = 1.0;
        double d2 = 1.0 - b.dot(G.fullPivLu().solve(b));
        if (std::fabs(r.distance * r.distance - d2) > 1e-12) oracle_ok = false;
        if (n == 1) third = std::fabs(r.distance * r.distance - 1.0 / 3.0) <= 1e-15;
    }
    PowerSeries g = PowerSeries::from_real({0.0, 1.0});
    bool unit_ok = true;
    for (long n = 1; n <= 5; ++n)
        unit_ok = unit_ok && std::fabs(opa_distance(g, 0.0, n, 64).distance - 1.0) <= 1e-14;
    bool monotone = true;
    for (long n = 1; n <= 5 && monotone; ++n) {
        double prev = -1.0;
        for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            double d = opa_distance(f, a, n, 64).distance;
            if (d < prev - 1e-14) monotone = false;
            prev = d;
        }
    }
    double t = sw.seconds();
    bool pass = oracle_ok && third && unit_ok && monotone && t < 1.0;
    return {"opa distances", pass,
            std::string("oracle ") + (oracle_ok ? "ok" : "FAIL") + ", degree-1 third " +
                (third ? "exact" : "FAIL") + ", f=z unit " + (unit_ok ? "ok" : "FAIL") +
                ", alpha-monotone " + (monotone ? "ok" : "FAIL") + ", " + detail::fmt(t) + " s"};
}

/// Outer function for E = {1} against the closed form (1-z)^{2N}.
inline CheckResult check_outer_identity() {
    detail::Stopwatch sw;
    OuterFunctionSpec spec{ArcSet::point(0.0), 1.0};
    double worst = 0.0;
    for (double N : {1.0, 2.0}) {
        spec.power = N;
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                double r = 0.9 * (double(i) + 0.5) / 8.0;
                std::complex<double> z = std::polar(r, 2.0 * M_PI * (double(j) + 0.37) / 8.0);
                std::complex<double> got = outer_eval(spec, z);
                std::complex<double> want = std::pow(1.0 - z, 2.0 * N);
                worst = std::max(worst, std::abs(got - want) / std::abs(want));
            }
        }
    }
    double t = sw.seconds();
    bool pass = worst <= 1e-5 && t < 10.0;
    return {"outer identity", pass,
            "worst relative error " + detail::fmt(worst) + " over 128 points, " + detail::fmt(t) +
                " s"};
}

/// Carleson integral: zero for the one-point set, Cauchy along logarithmic
/// truncations.
inline CheckResult check_carleson_integral() {
    detail::Stopwatch sw;
    auto point = carleson_integral(ArcSet::point(0.0));
    bool zero_ok = point.has_value() && std::fabs(*point) <= 1e-6;
    CantorScheme scheme = CantorScheme::logarithmic();
    std::vector<double> vals;
    for (int L = 2; L <= 8; ++L) {
        auto v = carleson_integral(arcs_at_level(scheme, L));
        if (!v.has_value()) return {"carleson integral", false, "level truncation covers circle"};
        vals.push_back(*v);
    }
    bool cauchy = true;
    double prev_diff = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        double diff = std::fabs(vals[i + 1] - vals[i]);
        if (diff > prev_diff) cauchy = false;
        prev_diff = diff;
    }
    double t = sw.seconds();
    return {"carleson integral", zero_ok && cauchy,
            "point set -> " + detail::fmt(point.value_or(-1.0)) + ", last truncation diff " +
                detail::fmt(prev_diff) + (cauchy ? " (decreasing)" : " (NOT decreasing)") + ", " +
                detail::fmt(t) + " s"};
}

/// Harmonic measure: arc length at the origin, additivity, rotation
/// equivariance.
inline CheckResult check_harmonic_measure(unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double worst_origin = 0.0, worst_prop = 0.0;
    for (int i = 0; i < 100; ++i) {
        std::vector<double> pts(6);
        for (auto& p : pts) p = unif(rng);
        std::sort(pts.begin(), pts.end());
        ArcSet A({{pts[0], pts[1]}, {pts[4], pts[5]}});
        ArcSet B({{pts[2], pts[3]}});
        std::vector<Arc> all = {{pts[0], pts[1]}, {pts[2], pts[3]}, {pts[4], pts[5]}};
        ArcSet AB(all);
        worst_origin = std::max(worst_origin,
                                std::fabs(harmonic_measure(0.0, AB) - AB.measure()));
        std::complex<double> z = std::polar(0.9 * unif(rng), 2.0 * M_PI * unif(rng));
        double add = std::fabs(harmonic_measure(z, AB) -
                               (harmonic_measure(z, A) + harmonic_measure(z, B)));
        double rot_offset = unif(rng);
        double rot = std::fabs(harmonic_measure(z * std::polar(1.0, 2.0 * M_PI * rot_offset),
                                                AB.rotated(rot_offset)) -
                               harmonic_measure(z, AB));
        worst_prop = std::max({worst_prop, add, rot});
    }
    bool pass = worst_origin <= 1e-12 && worst_prop <= 1e-10;
    return {"harmonic measure", pass,
            "origin error " + detail::fmt(worst_origin) + ", additivity/rotation error " +
                detail::fmt(worst_prop)};
}

/// Threshold build at alpha* = 1 with 4 terms: certified caps, positive real
/// part, boundary growth, |e^{-F}| <= 1, series agreement.
inline CheckResult check_threshold_build(unsigned seed) {
    detail::Stopwatch sw;
    ThresholdFunction F = build_threshold_F(1.0, 4);

    bool caps_ok = true;
    for (int n = 1; n <= 4; ++n)
        caps_ok = caps_ok && F.spec.caps[std::size_t(n - 1)] <= std::pow(4.0, -n);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    bool positive = true, modulus_ok = true;
    for (int i = 0; i < 10000 && (positive && modulus_ok); ++i) {
        std::complex<double> z = std::polar(std::sqrt(unif(rng)), 2.0 * M_PI * unif(rng));
        std::complex<double> v = F.eval(z);
        if (!(v.real() > 0.0)) positive = false;
        if (!(std::abs(std::exp(-v)) <= 1.0)) modulus_ok = false;
    }

    double r4 = F.spec.r_seq.back();
    double min_re = std::numeric_limits<double>::infinity();
    for (double t : F.boundary_sample(256))
        min_re = std::min(min_re, F.eval(r4 * circle_point(t)).real());
    double growth_target = 4.0 / (2.0 * std::sqrt(2.0)) - 1e-3;
    bool growth = min_re >= growth_target;

    CounterexampleFunction f = counterexample_f(F, 80);
    PowerSeries fs = f.series();
    double worst_series = 0.0;
    for (int i = 0; i < 20; ++i) {
        std::complex<double> z = std::polar(0.5 * unif(rng), 2.0 * M_PI * unif(rng));
        worst_series = std::max(worst_series, std::abs(f.eval(z) - fs.eval(z)));
    }
    double t = sw.seconds();
    bool pass = caps_ok && positive && modulus_ok && growth && worst_series <= 1e-6 && t < 300.0;
    std::string detail = std::string("caps ") + (caps_ok ? "ok" : "FAIL") + ", Re F > 0 " +
                         (positive ? "ok" : "FAIL") + ", min Re F(r4 zeta) = " +
                         detail::fmt(min_re) + " (target " + detail::fmt(growth_target) +
                         "), |e^-F| <= 1 " + (modulus_ok ? "ok" : "FAIL") + ", series err " +
                         detail::fmt(worst_series) + ", levels {";
    for (std::size_t i = 0; i < F.spec.levels.size(); ++i)
        detail += (i ? "," : "") + std::to_string(F.spec.levels[i]);
    detail += "}, " + detail::fmt(t) + " s";
    return {"threshold build", pass, detail};
}

/// The paper-scale theorems (cyclicity below the critical order,
/// non-cyclicity at it) are infinite statements; this suite covers them
/// through the finite certificates above, not by a cyclicity decision.
inline CheckResult note_paper_scale() {
    return {"paper-scale note", true,
            "cyclicity/non-cyclicity are infinite statements; covered by capacity "
            "certificates, real-part/energy lemmas, and OPA monotonicity only"};
}

inline std::vector<CheckResult> run_acceptance(unsigned seed) {
    std::vector<CheckResult> out;
    out.push_back(check_closed_scheme_series());
    out.push_back(check_log_scheme_verdicts());
    out.push_back(check_circle_equilibrium());
    out.push_back(check_fourier_energy_sandwich(seed));
    out.push_back(check_real_part_inequality(seed + 1));
    out.push_back(check_opa_distances());
    out.push_back(check_outer_identity());
    out.push_back(check_carleson_integral());
    out.push_back(check_harmonic_measure(seed + 2));
    out.push_back(check_threshold_build(seed + 3));
    out.push_back(note_paper_scale());
    return out;
}

} // namespace rcap

#endif
