#ifndef RCAP_MEASURE_HPP_
#define RCAP_MEASURE_HPP_

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rcap/arcs.hpp"

namespace rcap {

/// Probability measure with piecewise-uniform density on circle arcs.
/// Each support arc is stored as (center angle, angular length) in turns.
class DiscreteMeasure {
  public:
    DiscreteMeasure(std::vector<double> centers, std::vector<double> lengths,
                    std::vector<double> weights)
        : centers_(std::move(centers)), lengths_(std::move(lengths)),
          weights_(std::move(weights)) {
        if (centers_.size() != lengths_.size() || centers_.size() != weights_.size())
            throw std::invalid_argument("DiscreteMeasure: size mismatch");
        if (centers_.empty()) throw std::invalid_argument("DiscreteMeasure: empty support");
        double total = 0.0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (weights_[i] < 0.0)
                throw std::invalid_argument("DiscreteMeasure: negative weight");
            if (!(lengths_[i] > 0.0))
                throw std::invalid_argument("DiscreteMeasure: arc length must be positive");
            total += weights_[i];
        }
        if (std::fabs(total - 1.0) > 1e-12)
            throw std::invalid_argument("DiscreteMeasure: weights must sum to 1");
    }

    /// Uniform (normalized Lebesgue) measure on the circle, split into n arcs.
    static DiscreteMeasure uniform_circle(std::size_t n) {
        std::vector<double> c(n), l(n, 1.0 / double(n)), w(n, 1.0 / double(n));
        for (std::size_t i = 0; i < n; ++i) c[i] = (double(i) + 0.5) / double(n);
        return DiscreteMeasure(std::move(c), std::move(l), std::move(w));
    }

    /// Uniform-density probability measure on an arc set, each arc split into
    /// sub-arcs so the total node count is at least `nodes`.
    static DiscreteMeasure uniform_on_arcs(const ArcSet& arcs, std::size_t nodes) {
        auto parts = split_arcs(arcs, nodes);
        double total = 0.0;
        for (const auto& p : parts) total += p.length();
        std::vector<double> c, l, w;
        for (const auto& p : parts) {
            c.push_back(0.5 * (p.start + p.end));
            l.push_back(p.length());
            w.push_back(p.length() / total);
        }
        return DiscreteMeasure(std::move(c), std::move(l), std::move(w));
    }

    /// Subdivide an arc set into at least `nodes` sub-arcs, allocated to arcs
    /// proportionally to length (at least one per arc).
    static std::vector<Arc> split_arcs(const ArcSet& arcs, std::size_t nodes) {
        if (arcs.empty()) throw std::invalid_argument("split_arcs: empty arc set");
        if (nodes < arcs.size()) throw std::invalid_argument("split_arcs: nodes < arcs");
        double total = arcs.measure();
        std::vector<Arc> parts;
        for (const auto& a : arcs.arcs()) {
            std::size_t k = 1;
            if (total > 0.0)
                k = std::max<std::size_t>(
                    1, std::size_t(std::llround(double(nodes) * a.length() / total)));
            double h = a.length() / double(k);
            if (h <= 0.0) { // degenerate point arc cannot carry density
                throw std::invalid_argument("split_arcs: zero-length arc");
            }
            for (std::size_t j = 0; j < k; ++j)
                parts.push_back({a.start + double(j) * h, a.start + double(j + 1) * h});
        }
        return parts;
    }

    std::size_t size() const { return centers_.size(); }
    const std::vector<double>& centers() const { return centers_; }
    const std::vector<double>& lengths() const { return lengths_; }
    const std::vector<double>& weights() const { return weights_; }

    DiscreteMeasure with_weights(std::vector<double> w) const {
        return DiscreteMeasure(centers_, lengths_, std::move(w));
    }

    DiscreteMeasure rotated(double offset) const {
        std::vector<double> c(centers_);
        for (auto& x : c) x = std::fmod(x + offset, 1.0);
        return DiscreteMeasure(std::move(c), lengths_, weights_);
    }

    /// Support as an arc set.
    ArcSet support() const {
        std::vector<Arc> a;
        for (std::size_t i = 0; i < centers_.size(); ++i)
            a.push_back({centers_[i] - 0.5 * lengths_[i], centers_[i] + 0.5 * lengths_[i]});
        return ArcSet(std::move(a));
    }

  private:
    std::vector<double> centers_;
    std::vector<double> lengths_;
    std::vector<double> weights_;
};

/// k-th Fourier coefficient mu^(k) = int conj(zeta)^k dmu, arc-wise closed
/// form: a uniform arc of center c and length l contributes
/// e^{-2pi i k c} sinc(pi k l).
inline std::complex<double> fourier_coefficient(const DiscreteMeasure& mu, long k) {
    if (k == 0) return {1.0, 0.0};
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        double x = M_PI * double(k) * mu.lengths()[i];
        double sinc = std::sin(x) / x;
        double phase = -2.0 * M_PI * double(k) * mu.centers()[i];
        sum += mu.weights()[i] * sinc * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return sum;
}

} // namespace rcap

#endif
