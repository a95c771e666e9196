#ifndef RCAP_CANTOR_HPP_
#define RCAP_CANTOR_HPP_

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcap/arcs.hpp"

namespace rcap {

/// Generator of the Cantor-construction sequences {d_n}, {e_n}. Sequences are
/// exposed as base-2 logarithms so that deep levels far below the
/// double-precision range can still feed capacity series, and so that the
/// dyadic schemes produce exactly representable exponents.
class CantorScheme {
  public:
    enum class Kind { ClosedInterval, OpenInterval, Logarithmic, Custom };

    Kind kind() const { return kind_; }
    double alpha_star() const { return alpha_star_; }
    int splice_index() const { return n0_; }
    double base_offset() const { return base_offset_; }
    double base_length() const { return base_length_; }

    double log2_d(long n) const { return log2_d_(n); }
    double d(long n) const { return std::exp2(log2_d_(n)); }

    /// log2 e_n with e_n = d_n - 2 d_{n+1}, evaluated as
    /// log2 d_n + log1p(-2^{1 + log2 d_{n+1} - log2 d_n}) / log 2.
    double log2_e(long n) const {
        double ln = log2_d_(n), ln1 = log2_d_(n + 1);
        double q = -std::exp2(1.0 + ln1 - ln);
        if (q <= -1.0)
            throw std::runtime_error("CantorScheme: e_n <= 0 at n=" + std::to_string(n));
        return ln + std::log1p(q) / std::log(2.0);
    }
    double e(long n) const { return std::exp2(log2_e(n)); }

    /// Checks d_0 = 1, strict decrease, and e_n > 0 over n = 0..upto.
    void validate(long upto) const {
        if (std::fabs(log2_d(0)) > 1e-12)
            throw std::runtime_error("CantorScheme: d_0 != 1");
        for (long n = 0; n < upto; ++n) {
            if (!(log2_d(n + 1) < log2_d(n)))
                throw std::runtime_error("CantorScheme: d not strictly decreasing at n=" +
                                         std::to_string(n));
            log2_e(n); // throws if e_n <= 0
        }
    }

    CantorScheme relocated(double offset, double length) const {
        if (!(length > 0.0 && length <= 1.0))
            throw std::invalid_argument("CantorScheme: base length must lie in (0,1]");
        CantorScheme s(*this);
        s.base_offset_ = offset;
        s.base_length_ = length;
        return s;
    }

    /// d_n = 2^{n/(a*-1)}, e_n = d_n (1 - 2^{a*/(a*-1)}); zero capacity on
    /// (0, a*], positive above.
    static CantorScheme closed_interval(double alpha_star) {
        require_unit(alpha_star);
        CantorScheme s;
        s.kind_ = Kind::ClosedInterval;
        s.alpha_star_ = alpha_star;
        double rate = 1.0 / (alpha_star - 1.0); // negative
        s.log2_d_ = [rate](long n) { return double(n) * rate; };
        return s;
    }

    /// alpha_n = sqrt(n)(1-a*)/(sqrt(n)-1), d_n = 2^{-n/alpha_n} for n >= n0
    /// with n0 = min{n >= 2 : a* > 1/sqrt(n)}; the prefix d_1..d_{n0-1} is the
    /// backward geometric recursion d_n = (2+s)^{n0-n} d_{n0},
    /// s = d_{n0}^{-1/n0} - 2, which pins d_0 = 1 and keeps e_n = s d_{n+1} > 0.
    static CantorScheme open_interval(double alpha_star) {
        require_unit(alpha_star);
        CantorScheme s;
        s.kind_ = Kind::OpenInterval;
        s.alpha_star_ = alpha_star;
        long n0 = 2;
        while (!(alpha_star > 1.0 / std::sqrt(double(n0)))) ++n0;
        s.n0_ = int(n0);
        auto alpha_n = [alpha_star](long n) {
            double r = std::sqrt(double(n));
            return r * (1.0 - alpha_star) / (r - 1.0);
        };
        double log2_d_n0 = -double(n0) / alpha_n(n0);
        double log2_growth = -log2_d_n0 / double(n0); // log2(2 + s)
        s.log2_d_ = [n0, alpha_n, log2_d_n0, log2_growth](long n) {
            if (n >= n0) return -double(n) / alpha_n(n);
            return double(n0 - n) * log2_growth + log2_d_n0;
        };
        return s;
    }

    /// d_n = (n+1)^{-(n+1)}; zero capacity for all alpha < 1, positive
    /// logarithmic capacity.
    static CantorScheme logarithmic() {
        CantorScheme s;
        s.kind_ = Kind::Logarithmic;
        s.alpha_star_ = 1.0;
        s.log2_d_ = [](long n) { return -double(n + 1) * std::log2(double(n + 1)); };
        return s;
    }

    static CantorScheme custom(std::function<double(long)> log2_d) {
        CantorScheme s;
        s.kind_ = Kind::Custom;
        s.log2_d_ = std::move(log2_d);
        return s;
    }

    static std::string kind_name(Kind k) {
        switch (k) {
            case Kind::ClosedInterval: return "closed";
            case Kind::OpenInterval: return "open";
            case Kind::Logarithmic: return "log";
            default: return "custom";
        }
    }

  private:
    static void require_unit(double a) {
        if (!(a > 0.0 && a < 1.0))
            throw std::invalid_argument("CantorScheme: alpha_star must lie in (0,1)");
    }

    Kind kind_ = Kind::Custom;
    double alpha_star_ = 1.0;
    int n0_ = 0;
    double base_offset_ = 0.0;
    double base_length_ = 1.0;
    std::function<double(long)> log2_d_;
};

/// The 2^level closed arcs of the level-`level` construction stage, mapped
/// onto the circle through the scheme's base arc. Arcs meeting at a point
/// merge during ArcSet normalization.
inline ArcSet arcs_at_level(const CantorScheme& scheme, int level) {
    if (level < 0) throw std::invalid_argument("arcs_at_level: negative level");
    scheme.validate(level);
    if (scheme.log2_d(level) < -996.0) // below exp2(-996) ~ 1e-300
        throw std::runtime_error("arcs_at_level: d underflows double precision");
    struct Seg {
        double a, b;
    };
    std::vector<Seg> segs = {{0.0, 1.0}};
    for (int n = 1; n <= level; ++n) {
        double dn = scheme.d(n);
        std::vector<Seg> next;
        next.reserve(segs.size() * 2);
        for (const auto& s : segs) {
            next.push_back({s.a, s.a + dn});
            next.push_back({s.b - dn, s.b});
        }
        segs.swap(next);
    }
    std::vector<Arc> arcs;
    arcs.reserve(segs.size());
    for (const auto& s : segs)
        arcs.push_back({scheme.base_offset() + scheme.base_length() * s.a,
                        scheme.base_offset() + scheme.base_length() * s.b});
    return ArcSet(std::move(arcs));
}

} // namespace rcap

#endif
