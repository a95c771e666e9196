#ifndef RCAP_EQUILIBRIUM_HPP_
#define RCAP_EQUILIBRIUM_HPP_

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "rcap/arcs.hpp"
#include "rcap/energy.hpp"
#include "rcap/kernel.hpp"
#include "rcap/measure.hpp"

namespace rcap {

struct EquilibriumResult {
    DiscreteMeasure measure;
    double energy;
    double capacity_estimate; // 1/energy
    double frostman_gap;      // w'Kw - min_i (Kw)_i
    int iterations;
};

struct EquilibriumError : std::runtime_error {
    EquilibriumError(std::string msg, EquilibriumResult best)
        : std::runtime_error(std::move(msg)), best_iterate(std::move(best)) {}
    EquilibriumResult best_iterate;
};

/// Euclidean projection onto the probability simplex.
inline Eigen::VectorXd project_simplex(const Eigen::VectorXd& v) {
    const Eigen::Index n = v.size();
    std::vector<double> u(v.data(), v.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double css = 0.0, theta = 0.0;
    long rho = 0;
    for (long i = 0; i < n; ++i) {
        css += u[std::size_t(i)];
        double t = (css - 1.0) / double(i + 1);
        if (u[std::size_t(i)] - t > 0.0) {
            rho = i + 1;
            theta = t;
        }
    }
    (void)rho;
    return (v.array() - theta).cwiseMax(0.0).matrix();
}

/// Discrete energy matrix over the sub-arc nodes: kernel at midpoint chord
/// distance off the diagonal, closed-form flat self-energy on it.
inline Eigen::MatrixXd energy_matrix(const DiscreteMeasure& nodes, KernelOrder alpha) {
    const auto& c = nodes.centers();
    const auto& l = nodes.lengths();
    const Eigen::Index n = Eigen::Index(nodes.size());
    Eigen::MatrixXd K(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        K(i, i) = segment_self_energy(alpha, chord_of_span(l[std::size_t(i)]));
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double v = kernel_eval(alpha, chord_distance(c[std::size_t(i)], c[std::size_t(j)]));
            K(i, j) = v;
            K(j, i) = v;
        }
    }
    return K;
}

/// Discrete equilibrium measure of an arc set: minimizes w'Kw over the
/// probability simplex by projected gradient descent with Barzilai-Borwein
/// steps, stopping on the Frank-Wolfe optimality gap.
inline EquilibriumResult equilibrium(const ArcSet& arcs, KernelOrder alpha, std::size_t nodes,
                                     double tol, long max_iters = 100000) {
    if (arcs.empty()) throw std::invalid_argument("equilibrium: empty arc set");
    if (nodes < arcs.size()) throw std::invalid_argument("equilibrium: nodes < number of arcs");
    if (!(tol > 0.0)) throw std::invalid_argument("equilibrium: tol must be positive");

    DiscreteMeasure grid = DiscreteMeasure::uniform_on_arcs(arcs, nodes);
    Eigen::MatrixXd K = energy_matrix(grid, alpha);
    const Eigen::Index n = K.rows();

    Eigen::VectorXd w = Eigen::VectorXd::Constant(n, 1.0 / double(n));
    Eigen::VectorXd Kw = K * w;
    double val = w.dot(Kw);
    double gap = val - Kw.minCoeff();

    Eigen::VectorXd w_prev = w, g_prev = 2.0 * Kw;
    double step = 1.0 / std::max(1.0, K.diagonal().maxCoeff());
    int it = 0;
    while (gap > tol && it < max_iters) {
        Eigen::VectorXd g = 2.0 * Kw;
        if (it > 0) {
            Eigen::VectorXd dw = w - w_prev, dg = g - g_prev;
            double sy = dw.dot(dg), yy = dg.dot(dg);
            if (sy > 0.0 && yy > 0.0) step = std::clamp(sy / yy, 1e-12, 1e12);
        }
        w_prev = w;
        g_prev = g;
        Eigen::VectorXd cand = project_simplex(w - step * g);
        // monotone safeguard: halve the step until the energy does not rise
        Eigen::VectorXd Kc = K * cand;
        double cval = cand.dot(Kc);
        int backtracks = 0;
        while (cval > val + 1e-14 * std::fabs(val) && backtracks < 60) {
            step *= 0.5;
            cand = project_simplex(w - step * g);
            Kc = K * cand;
            cval = cand.dot(Kc);
            ++backtracks;
        }
        w = cand;
        Kw = Kc;
        val = cval;
        gap = val - Kw.minCoeff();
        ++it;
    }

    std::vector<double> weights(w.data(), w.data() + n);
    // clip projection round-off so the measure invariant holds exactly
    double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (auto& x : weights) x /= total;
    EquilibriumResult res{grid.with_weights(std::move(weights)), val, 1.0 / val, gap, it};
    if (gap > tol)
        throw EquilibriumError("equilibrium: Frank-Wolfe gap " + std::to_string(gap) +
                                   " above tol after max iterations",
                               res);
    return res;
}

} // namespace rcap

#endif
