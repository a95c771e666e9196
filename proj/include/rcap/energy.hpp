#ifndef RCAP_ENERGY_HPP_
#define RCAP_ENERGY_HPP_

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rcap/arcs.hpp"
#include "rcap/kernel.hpp"
#include "rcap/measure.hpp"

namespace rcap {

/// Self-energy of a uniform unit mass on a flat segment of length l:
/// exact double integral of the kernel, removing the K(0) singularity.
inline double segment_self_energy(KernelOrder alpha, double l) {
    if (!(l > 0.0)) throw std::domain_error("segment_self_energy: l must be positive");
    if (alpha.logarithmic()) return std::log(2.0) - std::log(l) + 1.5;
    double a = alpha.alpha;
    return 2.0 * std::pow(l, a - 1.0) / (a * (a + 1.0));
}

namespace detail {

/// Kernel averaged over a pair of disjoint uniform arcs: midpoint rule when
/// the arcs are small against their gap, otherwise the larger arc is split.
/// Keeps the near-field (touching arcs) accurate enough that refinement of
/// the whole measure converges at the smooth-quadrature rate.
inline double pair_kernel_average(KernelOrder alpha, double c1, double l1, double c2, double l2,
                                  int depth = 0) {
    double gap = circular_distance(c1, c2) - 0.5 * (l1 + l2);
    double big = std::max(l1, l2);
    if (depth >= 40 || big <= 0.25 * std::max(gap, 1e-14))
        return kernel_eval(alpha, chord_distance(c1, c2));
    if (l1 >= l2)
        return 0.5 * (pair_kernel_average(alpha, c1 - l1 / 4.0, l1 / 2.0, c2, l2, depth + 1) +
                      pair_kernel_average(alpha, c1 + l1 / 4.0, l1 / 2.0, c2, l2, depth + 1));
    return 0.5 * (pair_kernel_average(alpha, c1, l1, c2 - l2 / 4.0, l2 / 2.0, depth + 1) +
                  pair_kernel_average(alpha, c1, l1, c2 + l2 / 4.0, l2 / 2.0, depth + 1));
}

/// Pairwise + self energy of a piecewise-uniform measure, split-pair
/// quadrature for arc pairs and closed-form flat self terms.
inline double energy_nodes(const DiscreteMeasure& mu, KernelOrder alpha) {
    const auto& c = mu.centers();
    const auto& l = mu.lengths();
    const auto& w = mu.weights();
    std::size_t n = mu.size();
    KahanSum sum;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j)
            sum.add(2.0 * w[i] * w[j] * pair_kernel_average(alpha, c[i], l[i], c[j], l[j]));
        sum.add(w[i] * w[i] * segment_self_energy(alpha, chord_of_span(l[i])));
    }
    return sum.value();
}

/// Split every arc of the measure in two, halving weights.
inline DiscreteMeasure refine(const DiscreteMeasure& mu) {
    std::vector<double> c, l, w;
    c.reserve(mu.size() * 2);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        double h = mu.lengths()[i] / 2.0;
        c.push_back(mu.centers()[i] - h / 2.0);
        c.push_back(mu.centers()[i] + h / 2.0);
        l.push_back(h);
        l.push_back(h);
        w.push_back(mu.weights()[i] / 2.0);
        w.push_back(mu.weights()[i] / 2.0);
    }
    return DiscreteMeasure(std::move(c), std::move(l), std::move(w));
}

} // namespace detail

/// Riesz alpha-energy I_alpha[mu] by arc-pair midpoint quadrature with
/// closed-form self terms; arcs are subdivided until the value settles
/// within tol (relative).
inline double energy(const DiscreteMeasure& mu, KernelOrder alpha, double tol = 1e-6,
                     std::size_t max_nodes = 1 << 13) {
    DiscreteMeasure m = mu;
    double prev = detail::energy_nodes(m, alpha);
    while (m.size() * 2 <= max_nodes) {
        m = detail::refine(m);
        double cur = detail::energy_nodes(m, alpha);
        if (std::fabs(cur - prev) <= tol * std::fabs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

/// Average of K_alpha(|zeta - eta|) over a uniform arc, by recursive midpoint
/// splitting while the arc is not small against its distance to zeta.
inline double arc_kernel_average(KernelOrder alpha, double zeta_turns, double center,
                                 double length, int depth = 0) {
    double gap = circular_distance(zeta_turns, center) - length / 2.0;
    if (depth >= 40 || length <= 0.125 * std::max(gap, 1e-14)) {
        return kernel_eval(alpha, chord_distance(zeta_turns, center));
    }
    return 0.5 * (arc_kernel_average(alpha, zeta_turns, center - length / 4.0, length / 2.0,
                                     depth + 1) +
                  arc_kernel_average(alpha, zeta_turns, center + length / 4.0, length / 2.0,
                                     depth + 1));
}

/// Riesz alpha-potential K_{alpha,mu}(zeta) at a circle point given by its
/// angle in turns. Arcs containing zeta use the closed-form integrable-
/// singularity formula; others are split until small relative to their
/// distance from zeta.
inline double potential_at(const DiscreteMeasure& mu, KernelOrder alpha, double zeta_turns) {
    KahanSum sum;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        double c = mu.centers()[i], l = mu.lengths()[i], w = mu.weights()[i];
        double off = circular_distance(zeta_turns, c);
        if (off <= l / 2.0) {
            // zeta on the arc: flat singular integral, split at zeta
            double u = chord_of_span(l / 2.0 + off);
            double v = chord_of_span(l / 2.0 - off);
            double flat = u + v;
            double part;
            if (alpha.logarithmic()) {
                auto piece = [](double t) {
                    return t > 0.0 ? t * (std::log(2.0 / t) + 1.0) : 0.0;
                };
                part = piece(u) + piece(v);
            } else {
                double a = alpha.alpha;
                part = (std::pow(u, a) + std::pow(v, a)) / a;
            }
            if (flat > 0.0) sum.add(w / flat * part);
        } else {
            sum.add(w * arc_kernel_average(alpha, zeta_turns, c, l));
        }
    }
    return sum.value();
}

} // namespace rcap

#endif
