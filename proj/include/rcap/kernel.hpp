#ifndef RCAP_KERNEL_HPP_
#define RCAP_KERNEL_HPP_

#include <cmath>
#include <stdexcept>

namespace rcap {

/// Riesz kernel order alpha in (0,1]; alpha = 1 selects the logarithmic kernel.
struct KernelOrder {
    double alpha;

    explicit KernelOrder(double a) : alpha(a) {
        if (!(a > 0.0 && a <= 1.0))
            throw std::invalid_argument("KernelOrder: alpha must lie in (0,1]");
    }
    bool logarithmic() const { return alpha == 1.0; }
};

/// K_alpha(t): log^+(2/t) for alpha = 1, t^{alpha-1} for alpha < 1.
inline double kernel_eval(KernelOrder alpha, double t) {
    if (!(t > 0.0))
        throw std::domain_error("kernel_eval: t must be positive");
    if (alpha.logarithmic()) {
        double v = std::log(2.0 / t);
        return v > 0.0 ? v : 0.0;
    }
    return std::pow(t, alpha.alpha - 1.0);
}

/// Kernel evaluated from log2(t), for arguments too small to represent.
/// For alpha < 1 the result may overflow to +inf; callers treat that as
/// a divergent series term.
inline double kernel_eval_log2(KernelOrder alpha, double log2_t) {
    if (alpha.logarithmic()) {
        double v = (1.0 - log2_t) * std::log(2.0);
        return v > 0.0 ? v : 0.0;
    }
    return std::exp2((alpha.alpha - 1.0) * log2_t);
}

/// Kernel times 2^{-shift} in one exp2, so dyadic schemes stay exact and
/// huge kernels paired with tiny weights avoid intermediate overflow.
inline double kernel_eval_log2_scaled(KernelOrder alpha, double log2_t, double shift) {
    if (alpha.logarithmic()) return kernel_eval_log2(alpha, log2_t) * std::exp2(-shift);
    return std::exp2((alpha.alpha - 1.0) * log2_t - shift);
}

/// Gamma(k+1)/Gamma(k+beta) via log-gamma; lies strictly between
/// k^{1-beta} and (k+1)^{1-beta} for k >= 1 (Gautschi).
inline double gautschi_ratio(long k, double beta) {
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("gautschi_ratio: beta must lie in (0,1)");
    if (k < 0) throw std::invalid_argument("gautschi_ratio: k must be >= 0");
    return std::exp(std::lgamma(double(k) + 1.0) - std::lgamma(double(k) + beta));
}

/// Uniform lower constant of the real-part estimate: 1/cos((1-alpha1)*pi/2).
inline double real_lower_constant(double alpha1) {
    if (!(alpha1 > 0.0 && alpha1 < 1.0))
        throw std::invalid_argument("real_lower_constant: alpha1 must lie in (0,1)");
    return 1.0 / std::cos((1.0 - alpha1) * M_PI / 2.0);
}

/// Gamma(k+1-alpha)/(Gamma(1-alpha) k!), the binomial-series coefficient of
/// (1-z)^{alpha-1}, computed by log-gamma differences.
inline double binomial_series_coeff(long k, double alpha) {
    if (k == 0) return 1.0;
    return std::exp(std::lgamma(double(k) + 1.0 - alpha) - std::lgamma(1.0 - alpha) -
                    std::lgamma(double(k) + 1.0));
}

/// Compensated (Kahan) accumulator for long series.
class KahanSum {
  public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

} // namespace rcap

#endif
