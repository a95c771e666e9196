#ifndef RCAP_THRESHOLD_HPP_
#define RCAP_THRESHOLD_HPP_

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rcap/arcs.hpp"
#include "rcap/cantor.hpp"
#include "rcap/dirichlet.hpp"
#include "rcap/kernel.hpp"
#include "rcap/measure.hpp"
#include "rcap/quadrature.hpp"

namespace rcap {

/// (1 - z conj(eta))^{alpha-1} on the principal branch, with the real part of
/// 1 - z conj(eta) assembled as (1-|z|) + 2|z| sin^2(phi/2) so that no digits
/// cancel when z approaches the support radially.
inline std::complex<double> measure_kernel_power(std::complex<double> z, double eta_turns,
                                                 double alpha) {
    std::complex<double> u = z * std::conj(circle_point(eta_turns));
    double s = std::abs(u);
    double phi = std::arg(u);
    double sh = std::sin(0.5 * phi);
    double re = (1.0 - s) + 2.0 * s * sh * sh;
    double im = -s * std::sin(phi);
    double modulus = std::hypot(re, im);
    double angle = std::atan2(im, re);
    double p = alpha - 1.0;
    return std::polar(std::exp(p * std::log(modulus)), p * angle);
}

namespace detail {

/// int_a^b (1 - z conj(e^{2 pi i th}))^{alpha-1} dth by bisection until the
/// arc is short against its distance to z, then one Gauss-Legendre panel;
/// graded panels only in the deep-recursion case (z essentially on the arc).
inline std::complex<double> arc_power_integral(std::complex<double> z, double alpha, double a,
                                               double b, int depth = 0) {
    double l = b - a;
    double mid = 0.5 * (a + b);
    double vary = std::abs(z - circle_point(mid));
    if (chord_of_span(l) <= 0.5 * vary || l < 1e-12) {
        return GaussLegendre16::integrate(
            [&](double th) { return measure_kernel_power(z, th, alpha); }, a, b);
    }
    if (depth >= 30) {
        auto re_part = [&](double th) { return measure_kernel_power(z, th, alpha).real(); };
        auto im_part = [&](double th) { return measure_kernel_power(z, th, alpha).imag(); };
        return {integrate_graded(re_part, a, b, 40), integrate_graded(im_part, a, b, 40)};
    }
    return arc_power_integral(z, alpha, a, mid, depth + 1) +
           arc_power_integral(z, alpha, mid, b, depth + 1);
}

} // namespace detail

/// f_{alpha,mu}(z) = int (1 - z conj(eta))^{alpha-1} dmu(eta). Arcs shorter
/// than 1e-9 of a turn are collapsed to point masses at their centers; the
/// rest are integrated adaptively.
inline std::complex<double> f_alpha_mu_eval(const DiscreteMeasure& mu, double alpha,
                                            std::complex<double> z) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("f_alpha_mu_eval: alpha must lie in (0,1)");
    if (std::abs(z) >= 1.0 + 1e-12)
        throw std::invalid_argument("f_alpha_mu_eval: z must lie in the closed disc");
    std::complex<double> total = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        double c = mu.centers()[i], l = mu.lengths()[i], w = mu.weights()[i];
        if (l < 1e-9) {
            total += w * measure_kernel_power(z, c, alpha);
            continue;
        }
        total += (w / l) * detail::arc_power_integral(z, alpha, c - 0.5 * l, c + 0.5 * l);
    }
    return total;
}

/// Taylor coefficients of f_{alpha,mu}: c_k = Gamma(k+1-alpha) /
/// (Gamma(1-alpha) k!) * mu^(k), computed through log-gamma.
inline PowerSeries f_alpha_mu_series(const DiscreteMeasure& mu, double alpha, long M) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("f_alpha_mu_series: alpha must lie in (0,1)");
    if (M < 0) throw std::invalid_argument("f_alpha_mu_series: negative degree");
    PowerSeries f;
    f.coefficients.reserve(std::size_t(M) + 1);
    for (long k = 0; k <= M; ++k)
        f.coefficients.push_back(binomial_series_coeff(k, alpha) * fourier_coefficient(mu, k));
    f.tail_note = "coefficients are O(k^{-alpha} |mu^(k)|) by the Gautschi ratio bound";
    return f;
}

/// Harmonic measure omega(z, arcs) in the unit disc. The disc automorphism
/// w -> (w - z)/(1 - conj(z) w) maps arcs to arcs and omega to normalized arc
/// length at the origin, so the value is the total angular length of the
/// image arcs; exact up to rounding, no quadrature.
inline double harmonic_measure(std::complex<double> z, const ArcSet& arcs) {
    if (std::abs(z) >= 1.0) throw std::invalid_argument("harmonic_measure: z must lie in the disc");
    if (arcs.covers_circle()) return 1.0;
    auto image_angle = [&](double t) {
        std::complex<double> w = circle_point(t);
        std::complex<double> img = (w - z) / (1.0 - std::conj(z) * w);
        return std::arg(img) / (2.0 * M_PI); // turns in (-1/2, 1/2]
    };
    double total = 0.0;
    for (const auto& a : arcs.arcs()) {
        if (a.length() <= 0.0) continue;
        double span = image_angle(a.end) - image_angle(a.start);
        span -= std::floor(span); // the map preserves orientation
        total += span;
    }
    return std::min(total, 1.0);
}

/// Smallest r on the grid {1 - 2^{-j}} with
/// Re f_term(s zeta) >= margin/(2 C cap_n) for every sample zeta; with
/// full_window set, the inequality is also required on radii spanning
/// [r^2, r], which is where partial sums of the threshold series actually
/// evaluate the term (margin > 1 buys slack for points between the checked
/// radii). Search is monotone in j from start_j.
inline double dilation_radius(const std::function<std::complex<double>(std::complex<double>)>& f_term,
                              double cap_n, double C, const std::vector<double>& sample_turns,
                              bool full_window = false, int start_j = 1, int max_j = 40,
                              int* found_j = nullptr, double margin = 1.0) {
    if (sample_turns.empty()) throw std::invalid_argument("dilation_radius: empty sample");
    if (!(cap_n > 0.0 && C > 0.0)) throw std::invalid_argument("dilation_radius: bad constants");
    double target = margin / (2.0 * C * cap_n);
    for (int j = std::max(1, start_j); j <= max_j; ++j) {
        double r = 1.0 - std::ldexp(1.0, -j);
        std::vector<double> radii = {r};
        if (full_window)
            for (int i = 0; i < 4; ++i) radii.push_back(r * r + (r - r * r) * double(i) / 4.0);
        bool ok = true;
        for (double t : sample_turns) {
            std::complex<double> zeta = circle_point(t);
            for (double s : radii)
                if (!(f_term(s * zeta).real() >= target)) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) {
            if (found_j) *found_j = j;
            return r;
        }
    }
    throw std::runtime_error("dilation_radius: target " + std::to_string(target) +
                             " unreachable at r = 1 - 2^-" + std::to_string(max_j));
}

/// Replayable description of the capacity-weighted series
/// F(z) = sum_n caps_n f_{alpha_n, nu_n}(r_n z).
struct ThresholdFunctionSpec {
    std::string scheme_kind; // "log" or "closed"
    double alpha_star;
    std::vector<double> alpha_seq; // strictly increasing
    std::vector<int> levels;       // truncation level m_n realizing E_n
    std::vector<double> caps;      // certified capacity upper bounds, <= 4^{-n}
    std::vector<double> r_seq;     // dilation radii, increasing to 1

    nlohmann::json to_json() const {
        return {{"scheme", scheme_kind}, {"alpha_star", alpha_star}, {"alpha_seq", alpha_seq},
                {"levels", levels},      {"caps", caps},             {"r_seq", r_seq}};
    }
    static ThresholdFunctionSpec from_json(const nlohmann::json& j) {
        ThresholdFunctionSpec s;
        s.scheme_kind = j.at("scheme").get<std::string>();
        s.alpha_star = j.at("alpha_star").get<double>();
        s.alpha_seq = j.at("alpha_seq").get<std::vector<double>>();
        s.levels = j.at("levels").get<std::vector<int>>();
        s.caps = j.at("caps").get<std::vector<double>>();
        s.r_seq = j.at("r_seq").get<std::vector<double>>();
        return s;
    }
};

/// Built threshold function: the spec plus the level measures it was built
/// from, evaluable on the closed disc (each term sees r_n z, |r_n| < 1).
struct ThresholdFunction {
    ThresholdFunctionSpec spec;
    std::vector<DiscreteMeasure> measures; // nu_n, natural measure on level m_n
    double real_constant;                  // C = real_lower_constant(alpha_1)

    std::complex<double> eval(std::complex<double> z) const {
        KahanSum re, im;
        for (std::size_t n = 0; n < measures.size(); ++n) {
            std::complex<double> t =
                spec.caps[n] * f_alpha_mu_eval(measures[n], spec.alpha_seq[n], spec.r_seq[n] * z);
            re.add(t.real());
            im.add(t.imag());
        }
        return {re.value(), im.value()};
    }

    PowerSeries series(long M) const {
        PowerSeries F;
        F.coefficients.assign(std::size_t(M) + 1, 0.0);
        for (std::size_t n = 0; n < measures.size(); ++n) {
            PowerSeries term = f_alpha_mu_series(measures[n], spec.alpha_seq[n], M);
            double rk = 1.0;
            for (long k = 0; k <= M; ++k) {
                F.coefficients[std::size_t(k)] += spec.caps[n] * rk * term.coefficients[std::size_t(k)];
                rk *= spec.r_seq[n];
            }
        }
        F.tail_note = "term tails controlled by r_n^k; truncate with |z| r_n bounded away from 1";
        return F;
    }

    /// Boundary sample of the deepest neighborhood E_N: level-m_N arc start
    /// points (which belong to the Cantor set itself), strided to at most
    /// `cap` points.
    std::vector<double> boundary_sample(std::size_t cap = 256) const {
        return sample_of(measures.size() - 1, cap);
    }

    std::vector<double> sample_of(std::size_t n, std::size_t cap = 256) const {
        const auto& c = measures[n].centers();
        const auto& l = measures[n].lengths();
        std::size_t stride = std::max<std::size_t>(1, c.size() / cap);
        std::vector<double> out;
        for (std::size_t i = 0; i < c.size(); i += stride) out.push_back(c[i] - 0.5 * l[i]);
        return out;
    }
};

namespace detail {

/// Lower-bound capacity series partial sum L_m = sum_{j=0}^{m} K_alpha(d_j) /
/// 2^{j+1}; 1/L_m is a certified capacity upper bound for the level-m stage,
/// because the natural measure's potential exceeds L_m everywhere on it
/// (chordal distances on the base arc of arclength d_0 = 1 are below the d_j).
inline double lower_partial(const CantorScheme& scheme, double alpha, int m) {
    KahanSum s;
    for (int j = 0; j <= m; ++j)
        s.add(kernel_eval_log2_scaled(KernelOrder(alpha), scheme.log2_d(j), double(j + 1)));
    return s.value();
}

} // namespace detail

/// Build F = sum caps_n f_{alpha_n,nu_n}(r_n z) for `terms` terms.
/// alpha_n = alpha_star (0.5 + (n-1)/1000): a strictly increasing sequence
/// kept near alpha_star/2 so the level search stays inside double precision
/// (the certified bound 1/L_m must reach 4^n, and larger alpha_n slow the
/// series down catastrophically for the logarithmic scheme).
/// Levels m_n are the smallest with 1/L_{m_n} <= 4^{-n}; nu_n is the natural
/// (equal-weight) measure on the level-m_n arcs; r_n comes from the dilation
/// rule checked over the radius window [r^2, r] actually used by partial sums.
inline ThresholdFunction build_threshold_F(double alpha_star, int terms, int level_budget = 12,
                                           int max_j = 40) {
    if (terms < 1) throw std::invalid_argument("build_threshold_F: terms must be >= 1");
    CantorScheme scheme = (alpha_star == 1.0) ? CantorScheme::logarithmic()
                                              : CantorScheme::closed_interval(alpha_star);
    // Base arc of arclength d_0 = 1 (1/2pi of a turn): chords never exceed
    // the d_j, so the potential bound behind 1/L_m is honest.
    scheme = scheme.relocated(0.0, 1.0 / (2.0 * M_PI));

    ThresholdFunction F;
    F.spec.scheme_kind = CantorScheme::kind_name(scheme.kind());
    F.spec.alpha_star = alpha_star;
    F.real_constant = 0.0;

    int prev_j = 1;
    for (int n = 1; n <= terms; ++n) {
        double alpha_n = alpha_star * (0.5 + double(n - 1) / 1000.0);
        int level = -1;
        double cap_bound = 0.0;
        for (int m = 1; m <= level_budget; ++m) {
            double L = detail::lower_partial(scheme, alpha_n, m);
            if (1.0 / L <= std::pow(4.0, -n)) {
                level = m;
                cap_bound = 1.0 / L;
                break;
            }
        }
        if (level < 0)
            throw std::runtime_error("build_threshold_F: level budget exhausted for term " +
                                     std::to_string(n));

        ArcSet arcs = arcs_at_level(scheme, level);
        std::vector<double> c, l, w;
        for (const auto& a : arcs.arcs()) {
            c.push_back(0.5 * (a.start + a.end));
            l.push_back(a.length());
            w.push_back(1.0);
        }
        for (auto& x : w) x /= double(c.size());
        DiscreteMeasure nu(std::move(c), std::move(l), std::move(w));

        F.spec.alpha_seq.push_back(alpha_n);
        F.spec.levels.push_back(level);
        F.spec.caps.push_back(cap_bound);
        F.measures.push_back(nu);
        if (n == 1) F.real_constant = real_lower_constant(alpha_n);

        auto f_term = [&nu, alpha_n](std::complex<double> z) {
            return f_alpha_mu_eval(nu, alpha_n, z);
        };
        // arc starts (points of the Cantor set) plus centers, so any strided
        // start sample of a deeper level stays covered by this certification
        std::vector<double> sample;
        {
            const auto& cc = F.measures.back().centers();
            const auto& ll = F.measures.back().lengths();
            std::size_t stride = std::max<std::size_t>(1, cc.size() / 256);
            for (std::size_t i = 0; i < cc.size(); i += stride) {
                sample.push_back(cc[i] - 0.5 * ll[i]);
                sample.push_back(cc[i]);
            }
        }
        int jn = prev_j;
        double r = dilation_radius(f_term, cap_bound, F.real_constant, sample, true, prev_j,
                                   max_j, &jn, 1.25);
        if (!F.spec.r_seq.empty() && r <= F.spec.r_seq.back()) {
            jn += 1; // keep r_n strictly increasing
            if (jn > max_j) throw std::runtime_error("build_threshold_F: radius grid exhausted");
            r = 1.0 - std::ldexp(1.0, -jn);
        }
        F.spec.r_seq.push_back(r);
        prev_j = jn;
    }
    return F;
}

/// Rebuild the measures of a serialized spec (bit-identical replay: levels,
/// caps and radii are taken from the spec, not recomputed).
inline ThresholdFunction replay_threshold_F(const ThresholdFunctionSpec& spec) {
    CantorScheme scheme = (spec.scheme_kind == "log") ? CantorScheme::logarithmic()
                                                      : CantorScheme::closed_interval(spec.alpha_star);
    scheme = scheme.relocated(0.0, 1.0 / (2.0 * M_PI));
    ThresholdFunction F;
    F.spec = spec;
    F.real_constant = real_lower_constant(spec.alpha_seq.at(0));
    for (int m : spec.levels) {
        ArcSet arcs = arcs_at_level(scheme, m);
        std::vector<double> c, l, w;
        for (const auto& a : arcs.arcs()) {
            c.push_back(0.5 * (a.start + a.end));
            l.push_back(a.length());
            w.push_back(1.0);
        }
        for (auto& x : w) x /= double(c.size());
        F.measures.emplace_back(std::move(c), std::move(l), std::move(w));
    }
    return F;
}

/// f = e^{-F}: pointwise evaluator plus Taylor series through the
/// exponential-of-series recurrence g_k = -(1/k) sum_{j=1}^{k} j F_j g_{k-j}.
struct CounterexampleFunction {
    std::function<std::complex<double>(std::complex<double>)> F_eval;
    PowerSeries F_series;

    std::complex<double> eval(std::complex<double> z) const { return std::exp(-F_eval(z)); }

    PowerSeries series() const {
        const auto& Fc = F_series.coefficients;
        PowerSeries g;
        g.coefficients.assign(Fc.size(), 0.0);
        g.coefficients[0] = std::exp(-Fc[0]);
        for (std::size_t k = 1; k < Fc.size(); ++k) {
            std::complex<double> acc = 0.0;
            for (std::size_t j = 1; j <= k; ++j) acc += double(j) * Fc[j] * g.coefficients[k - j];
            g.coefficients[k] = -acc / double(k);
        }
        g.tail_note = "exponential of the truncated series; valid to the same degree";
        return g;
    }
};

inline CounterexampleFunction counterexample_f(const ThresholdFunction& F, long M) {
    CounterexampleFunction f;
    f.F_eval = [F](std::complex<double> z) { return F.eval(z); };
    f.F_series = F.series(M);
    return f;
}

} // namespace rcap

#endif
