#ifndef RCAP_CAPACITY_HPP_
#define RCAP_CAPACITY_HPP_

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rcap/cantor.hpp"
#include "rcap/kernel.hpp"

namespace rcap {

enum class CapacityVerdict { ZeroCertified, PositiveCertified, Inconclusive };

inline std::string to_string(CapacityVerdict v) {
    switch (v) {
        case CapacityVerdict::ZeroCertified: return "ZERO_CERTIFIED";
        case CapacityVerdict::PositiveCertified: return "POSITIVE_CERTIFIED";
        default: return "INCONCLUSIVE";
    }
}

/// Two-sided capacity series evidence:
///   sum K_a(d_n)/2^{n+1} <= 1/cap <= sum K_a(e_n)/2^n.
/// The raw series values are reported as-is; the circle-vs-segment Lipschitz
/// constants are not tracked, so only the zero/positive verdicts are sharp.
struct CapacityCertificate {
    double alpha;
    std::vector<double> lower_series_partial; // running partial sums
    double lower_series_value = 0.0;
    bool lower_divergent = false; // saturated double range
    double upper_series_value = std::numeric_limits<double>::infinity();
    bool upper_finite = false;
    double upper_tail_bound = std::numeric_limits<double>::infinity();
    double cap_lower_bound = 0.0; // 1/upper when the upper series converges
    double cap_upper_bound = std::numeric_limits<double>::infinity();
    CapacityVerdict verdict = CapacityVerdict::Inconclusive;
};

/// Evaluates both capacity series to `terms` terms and classifies.
/// ZERO_CERTIFIED: lower partial sums pass the divergence rule (exceed the
/// threshold, or the last 50 terms stay bounded away from 0).
/// POSITIVE_CERTIFIED: upper terms pass a ratio test with tail below tol.
inline CapacityCertificate cantor_capacity_bounds(const CantorScheme& scheme, KernelOrder alpha,
                                                  long terms, double tail_tol = 1e-9) {
    if (terms < 1) throw std::invalid_argument("cantor_capacity_bounds: terms must be >= 1");
    constexpr double kSaturate = 1e300;
    constexpr double kDivergenceThreshold = 1e3;

    CapacityCertificate cert;
    cert.alpha = alpha.alpha;

    // lower series over d_n
    KahanSum lower;
    std::vector<double> lower_terms;
    cert.lower_series_partial.reserve(std::size_t(terms));
    for (long n = 0; n < terms; ++n) {
        double t = kernel_eval_log2_scaled(alpha, scheme.log2_d(n), double(n + 1));
        lower_terms.push_back(t);
        if (!std::isfinite(t) || lower.value() + t > kSaturate) {
            cert.lower_divergent = true;
            cert.lower_series_partial.push_back(std::numeric_limits<double>::infinity());
            break;
        }
        lower.add(t);
        cert.lower_series_partial.push_back(lower.value());
    }
    cert.lower_series_value =
        cert.lower_divergent ? std::numeric_limits<double>::infinity() : lower.value();
    if (cert.lower_series_value > 0.0)
        cert.cap_upper_bound = 1.0 / cert.lower_series_value; // 0 when divergent

    // upper series over e_n
    KahanSum upper;
    std::vector<double> upper_terms;
    bool upper_saturated = false;
    for (long n = 0; n < terms; ++n) {
        double t = kernel_eval_log2_scaled(alpha, scheme.log2_e(n), double(n));
        if (!std::isfinite(t) || upper.value() + t > kSaturate) {
            upper_saturated = true;
            break;
        }
        upper_terms.push_back(t);
        upper.add(t);
    }

    // ratio test over the tail of the upper terms
    if (!upper_saturated && upper_terms.size() >= 20) {
        double q = 0.0;
        std::size_t look = 20;
        for (std::size_t i = upper_terms.size() - look; i + 1 < upper_terms.size(); ++i) {
            if (upper_terms[i] <= 0.0) continue;
            q = std::max(q, upper_terms[i + 1] / upper_terms[i]);
        }
        if (q < 0.99 && upper_terms.back() >= 0.0) {
            cert.upper_tail_bound = upper_terms.back() * q / (1.0 - q);
            if (cert.upper_tail_bound < tail_tol) {
                cert.upper_finite = true;
                cert.upper_series_value = upper.value();
                cert.cap_lower_bound = 1.0 / cert.upper_series_value;
            }
        }
    }

    if (cert.upper_finite) {
        cert.verdict = CapacityVerdict::PositiveCertified;
    } else {
        bool beyond_threshold =
            cert.lower_divergent || cert.lower_series_value > kDivergenceThreshold;
        bool terms_bounded_away = false;
        if (!cert.lower_divergent && lower_terms.size() >= 50) {
            double m = std::numeric_limits<double>::infinity();
            for (std::size_t i = lower_terms.size() - 50; i < lower_terms.size(); ++i)
                m = std::min(m, lower_terms[i]);
            terms_bounded_away = m > 1e-4;
        }
        if (beyond_threshold || terms_bounded_away)
            cert.verdict = CapacityVerdict::ZeroCertified;
    }
    return cert;
}

} // namespace rcap

#endif
