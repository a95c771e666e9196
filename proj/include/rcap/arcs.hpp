#ifndef RCAP_ARCS_HPP_
#define RCAP_ARCS_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace rcap {

using complexd = std::complex<double>;

/// Point on the unit circle at angle theta (in turns).
inline complexd circle_point(double theta_turns) {
    double a = 2.0 * M_PI * theta_turns;
    return {std::cos(a), std::sin(a)};
}

/// Circular distance between two angles, in turns; result in [0, 1/2].
inline double circular_distance(double t1, double t2) {
    // reduce each angle first: differencing angles a whole turn apart would
    // round away separations below one ulp of a turn
    double a = t1 - std::floor(t1);
    double b = t2 - std::floor(t2);
    double w = std::fabs(a - b);
    return w > 0.5 ? 1.0 - w : w;
}

/// Chord length |e^{2pi i t1} - e^{2pi i t2}| = 2 sin(pi w).
inline double chord_distance(double theta1, double theta2) {
    return 2.0 * std::sin(M_PI * circular_distance(theta1, theta2));
}

/// Chord subtended by an angular span of `turns` (clamped to a half circle).
inline double chord_of_span(double turns) {
    double w = std::min(std::fabs(turns), 0.5);
    return 2.0 * std::sin(M_PI * w);
}

/// One closed arc [start, end] in turns. start == end encodes a single point.
struct Arc {
    double start;
    double end;
    double length() const { return end - start; }
};

/// Finite union of closed arcs on the unit circle, angles stored in turns.
/// After normalization arcs are sorted, pairwise disjoint, and contained in
/// [0,1]; arcs touching at an interior point are merged.
class ArcSet {
  public:
    ArcSet() = default;

    explicit ArcSet(std::vector<Arc> arcs) : arcs_(std::move(arcs)) { normalize(); }

    static ArcSet full_circle() { return ArcSet({{0.0, 1.0}}); }
    static ArcSet point(double theta) {
        double t = wrap(theta);
        return ArcSet({{t, t}});
    }

    const std::vector<Arc>& arcs() const { return arcs_; }
    bool empty() const { return arcs_.empty(); }
    std::size_t size() const { return arcs_.size(); }

    /// Total angular measure in turns.
    double measure() const {
        double m = 0.0;
        for (const auto& a : arcs_) m += a.length();
        return m;
    }

    bool covers_circle() const {
        return arcs_.size() == 1 && arcs_[0].start == 0.0 && arcs_[0].end == 1.0;
    }

    /// Whether the angle theta (turns) lies on the closed point set.
    bool contains_angle(double theta) const {
        double t = wrap(theta);
        for (const auto& a : arcs_) {
            if (t >= a.start - kEps && t <= a.end + kEps) return true;
        }
        // the wrap seam: 0 and 1 are the same circle point
        if (t < kEps || t > 1.0 - kEps) {
            for (const auto& a : arcs_) {
                if (a.start < kEps || a.end > 1.0 - kEps) return true;
            }
        }
        return false;
    }

    ArcSet rotated(double offset) const {
        std::vector<Arc> out;
        for (const auto& a : arcs_) out.push_back({a.start + offset, a.end + offset});
        return ArcSet(std::move(out));
    }

    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& a : arcs_) j.push_back({a.start, a.end});
        return j;
    }

    static ArcSet from_json(const nlohmann::json& j) {
        std::vector<Arc> arcs;
        for (const auto& p : j) arcs.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        return ArcSet(std::move(arcs));
    }

  private:
    static constexpr double kEps = 1e-15;

    static double wrap(double t) {
        double w = std::fmod(t, 1.0);
        if (w < 0.0) w += 1.0;
        return w;
    }

    void normalize() {
        std::vector<Arc> split;
        for (auto a : arcs_) {
            if (a.end < a.start)
                throw std::invalid_argument("ArcSet: arc with end < start");
            if (a.end - a.start >= 1.0) {
                split.push_back({0.0, 1.0});
                continue;
            }
            double s = wrap(a.start);
            double e = s + (a.end - a.start);
            if (e <= 1.0) {
                split.push_back({s, e});
            } else {
                split.push_back({s, 1.0});
                split.push_back({0.0, e - 1.0});
            }
        }
        std::sort(split.begin(), split.end(),
                  [](const Arc& x, const Arc& y) { return x.start < y.start; });
        arcs_.clear();
        for (const auto& a : split) {
            if (!arcs_.empty() && a.start <= arcs_.back().end + kEps) {
                arcs_.back().end = std::max(arcs_.back().end, a.end);
                if (arcs_.back().end - arcs_.back().start >= 1.0) {
                    arcs_.assign(1, {0.0, 1.0});
                    return;
                }
            } else {
                arcs_.push_back(a);
            }
        }
    }

    std::vector<Arc> arcs_;
};

/// Euclidean distance from z (|z| <= 1) to the closed arc set.
inline double dist_to_arcs(complexd z, const ArcSet& arcs) {
    if (arcs.empty()) throw std::invalid_argument("dist_to_arcs: empty arc set");
    double r = std::abs(z);
    double theta = std::arg(z) / (2.0 * M_PI);
    if (theta < 0.0) theta += 1.0;
    if (r == 0.0) return 1.0;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : arcs.arcs()) {
        double d;
        bool inside;
        if (a.start <= theta && theta <= a.end) {
            inside = true;
        } else {
            // circular containment across the 0/1 seam
            double t2 = theta < a.start ? theta + 1.0 : theta - 1.0;
            inside = (a.start <= t2 && t2 <= a.end);
        }
        if (inside) {
            d = std::fabs(1.0 - r);
        } else {
            d = std::min(std::abs(z - circle_point(a.start)), std::abs(z - circle_point(a.end)));
        }
        best = std::min(best, d);
    }
    return best;
}

/// Complementary open arcs (gaps) of the set, each tagged with its endpoint
/// angles. Empty when the set covers the whole circle.
inline std::vector<Arc> complementary_arcs(const ArcSet& arcs) {
    std::vector<Arc> gaps;
    if (arcs.covers_circle() || arcs.empty()) return gaps;
    const auto& a = arcs.arcs();
    for (std::size_t i = 0; i + 1 < a.size(); ++i) gaps.push_back({a[i].end, a[i + 1].start});
    // wrap-around gap from the last arc back to the first
    double s = a.back().end;
    double e = a.front().start + 1.0;
    if (e - s > 1e-15) gaps.push_back({s, e});
    return gaps;
}

} // namespace rcap

#endif
