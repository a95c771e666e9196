#ifndef RCAP_OUTER_HPP_
#define RCAP_OUTER_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "rcap/arcs.hpp"
#include "rcap/quadrature.hpp"

namespace rcap {

/// Endpoints of an arc set as angles in turns (point arcs contribute a
/// doubled endpoint, so the boundary factor gets squared there).
inline std::vector<double> arc_endpoints(const ArcSet& arcs) {
    std::vector<double> pts;
    for (const auto& a : arcs.arcs()) {
        pts.push_back(a.start);
        pts.push_back(a.start == a.end ? a.start : a.end);
    }
    return pts;
}

/// log phi_E(zeta) = log|zeta - a_j| + log|zeta - b_j| where (a_j, b_j) is
/// the complementary arc containing zeta; -infinity when zeta lies on E.
inline double log_boundary_factor(const ArcSet& arcs, double theta_turns) {
    double t = theta_turns - std::floor(theta_turns);
    for (const auto& g : complementary_arcs(arcs)) {
        double s = t;
        if (s < g.start) s += 1.0; // gap may wrap past 1
        if (s > g.start && s < g.end) // work in the gap's frame: no wrap seam
            return std::log(2.0 * std::sin(M_PI * (s - g.start))) +
                   std::log(2.0 * std::sin(M_PI * (g.end - s)));
    }
    return -std::numeric_limits<double>::infinity();
}

/// phi_E(zeta) = |(zeta - a_j)(zeta - b_j)| on the gap containing zeta, 0 on E.
inline double boundary_factor(const ArcSet& arcs, double theta_turns) {
    double lp = log_boundary_factor(arcs, theta_turns);
    return std::isinf(lp) ? 0.0 : std::exp(lp);
}

struct OuterFunctionSpec {
    ArcSet arcs;
    double power; // exponent N applied to the outer function

    nlohmann::json to_json() const {
        return {{"arcs", arcs.to_json()}, {"power", power}};
    }
    static OuterFunctionSpec from_json(const nlohmann::json& j) {
        return {ArcSet::from_json(j.at("arcs")), j.at("power").get<double>()};
    }
};

/// Outer function with boundary modulus phi_E^N evaluated at |z| < 1 via the
/// Herglotz integral exp(N * int_0^1 (zeta+z)/(zeta-z) log phi_E(zeta) dtheta).
/// The circle is split at the arc endpoints, where log phi_E has integrable
/// logarithmic singularities, and each piece is integrated on graded panels.
inline std::complex<double> outer_eval(const OuterFunctionSpec& spec, std::complex<double> z) {
    if (std::abs(z) >= 1.0) throw std::invalid_argument("outer_eval: z must lie inside the disc");
    if (spec.arcs.arcs().empty()) return 1.0;

    std::vector<double> cuts = arc_endpoints(spec.arcs);
    // extra cut at arg(z): grading toward it resolves the (zeta-z)^{-1}
    // near-singularity when |z| approaches 1
    double tz = std::arg(z) / (2.0 * M_PI);
    cuts.push_back(tz - std::floor(tz));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::complex<double> total = 0.0;
    std::size_t m = cuts.size();
    for (std::size_t i = 0; i < m; ++i) {
        double a = cuts[i];
        double b = (i + 1 < m) ? cuts[i + 1] : cuts[0] + 1.0;
        if (b <= a) continue;
        auto re_part = [&](double th) {
            std::complex<double> zeta = circle_point(th);
            std::complex<double> h = (zeta + z) / (zeta - z);
            return h.real() * log_boundary_factor(spec.arcs, th);
        };
        auto im_part = [&](double th) {
            std::complex<double> zeta = circle_point(th);
            std::complex<double> h = (zeta + z) / (zeta - z);
            return h.imag() * log_boundary_factor(spec.arcs, th);
        };
        total += std::complex<double>(integrate_graded(re_part, a, b, 48),
                                      integrate_graded(im_part, a, b, 48));
    }
    return std::exp(spec.power * total);
}

} // namespace rcap

#endif
