#ifndef RCAP_CARLESON_HPP_
#define RCAP_CARLESON_HPP_

#include <cmath>
#include <limits>
#include <optional>

#include "rcap/arcs.hpp"
#include "rcap/quadrature.hpp"

namespace rcap {

/// Carleson integral int_T log(1/dist(zeta, E)) |dzeta| taken over the
/// complementary arcs of E (on E itself the distance vanishes). Returns
/// nullopt as the +infinity flag when the arcs cover the whole circle.
/// Inside a gap the nearest set point is one of the two gap endpoints, so the
/// integrand has integrable log singularities exactly at the panel ends.
inline std::optional<double> carleson_integral(const ArcSet& arcs, double tol = 1e-9) {
    if (arcs.empty()) throw std::invalid_argument("carleson_integral: empty arc set");
    if (arcs.covers_circle()) return std::nullopt;

    double total = 0.0;
    for (const auto& gap : complementary_arcs(arcs)) {
        auto integrand = [&](double theta) {
            double d = std::min(chord_distance(theta, gap.start), chord_distance(theta, gap.end));
            return -std::log(std::max(d, 1e-300));
        };
        int depth = 48;
        double prev = integrate_graded(integrand, gap.start, gap.end, depth);
        double cur = integrate_graded(integrand, gap.start, gap.end, depth + 8);
        if (std::fabs(cur - prev) > tol * (1.0 + std::fabs(cur)))
            throw std::runtime_error("carleson_integral: quadrature did not settle; estimate " +
                                     std::to_string(cur));
        total += cur;
    }
    return 2.0 * M_PI * total; // |dzeta| = 2 pi dtheta
}

} // namespace rcap

#endif
