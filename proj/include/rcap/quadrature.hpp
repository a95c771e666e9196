#ifndef RCAP_QUADRATURE_HPP_
#define RCAP_QUADRATURE_HPP_

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace rcap {

/// 16-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre16 {
    static constexpr std::array<double, 8> nodes = {
        0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
        0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
    static constexpr std::array<double, 8> weights = {
        0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
        0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

    template <typename F, typename R = decltype(std::declval<F>()(0.0))>
    static R integrate(F&& f, double a, double b) {
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        R sum{};
        for (std::size_t i = 0; i < 8; ++i) {
            sum += weights[i] * (f(mid + half * nodes[i]) + f(mid - half * nodes[i]));
        }
        return half * sum;
    }
};

/// Integrate f over [a, b] with panels graded geometrically (ratio 2) toward
/// both endpoints, resolving integrable endpoint singularities such as logs
/// and |x-a|^{-s}, s < 1. `depth` controls the smallest panel, (b-a)*2^-depth.
template <typename F, typename R = decltype(std::declval<F>()(0.0))>
R integrate_graded(F&& f, double a, double b, int depth = 48) {
    double len = b - a;
    if (!(len > 0.0)) return R{};
    // keep panels a few ulps wide, or quadrature nodes round onto the
    // endpoint singularities
    double min_w = 4.0 * std::numeric_limits<double>::epsilon() *
                   std::max({std::fabs(a), std::fabs(b), len});
    while (depth > 1 && len * std::ldexp(0.5, -depth) < min_w) --depth;
    R sum{};
    double left = a + len * std::ldexp(0.5, -depth);
    // tiny sliver next to each endpoint, midpoint rule
    if (left > a && 0.5 * (a + left) > a) sum += (left - a) * f(0.5 * (a + left));
    for (int k = depth; k >= 1; --k) {
        double x0 = a + len * std::ldexp(0.5, -k);
        double x1 = a + len * std::ldexp(0.5, -(k - 1));
        if (x1 > x0) sum += GaussLegendre16::integrate(f, x0, x1);
    }
    double right = b - len * std::ldexp(0.5, -depth);
    if (right < b && 0.5 * (right + b) < b) sum += (b - right) * f(0.5 * (right + b));
    for (int k = depth; k >= 1; --k) {
        double x0 = b - len * std::ldexp(0.5, -(k - 1));
        double x1 = b - len * std::ldexp(0.5, -k);
        if (x1 > x0) sum += GaussLegendre16::integrate(f, x0, x1);
    }
    return sum;
}

/// Adaptive trapezoid rule for smooth 1-periodic integrands over [0, 1],
/// doubling the node count until the relative change drops below tol.
template <typename F>
double integrate_periodic(F&& f, double tol, int n0 = 64, int nmax = 1 << 20) {
    int n = n0;
    auto eval = [&](int m) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += f(double(i) / double(m));
        return s / double(m);
    };
    double prev = eval(n);
    while (n < nmax) {
        n *= 2;
        double cur = eval(n);
        if (std::fabs(cur - prev) <= tol * (1.0 + std::fabs(cur))) return cur;
        prev = cur;
    }
    throw std::runtime_error("integrate_periodic: did not converge");
}

} // namespace rcap

#endif
