#ifndef RCAP_FOURIER_ENERGY_HPP_
#define RCAP_FOURIER_ENERGY_HPP_

#include <cmath>
#include <stdexcept>
#include <utility>

#include "rcap/kernel.hpp"
#include "rcap/measure.hpp"

namespace rcap {

/// Two-sided Fourier bound on the Riesz energy for alpha in [alpha1, 1):
///   lower = sum_k Gamma(k+1-a)/(Gamma(1-a) k!) |mu^(k)|^2,
///   upper = lower / cos((1-alpha1) pi/2).
/// Throws when `terms` leaves a tail estimate above tail_tol; arc measures
/// have |mu^(k)| <= M/k with M = sum w_i/(pi l_i).
inline std::pair<double, double> energy_fourier_bounds(const DiscreteMeasure& mu,
                                                       KernelOrder alpha, KernelOrder alpha1,
                                                       long terms, double tail_tol = 1e-6) {
    double a = alpha.alpha, a1 = alpha1.alpha;
    if (!(a < 1.0)) throw std::invalid_argument("energy_fourier_bounds: alpha must be < 1");
    if (!(a1 <= a)) throw std::invalid_argument("energy_fourier_bounds: need alpha1 <= alpha");
    if (terms < 1) throw std::invalid_argument("energy_fourier_bounds: terms must be >= 1");

    double coeff_bound = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        coeff_bound += mu.weights()[i] / (M_PI * mu.lengths()[i]);
    // c_k <= k^{-a}/Gamma(1-a) by Gautschi, so the omitted tail is below
    // M^2/Gamma(1-a) * sum_{k>K} k^{-2-a} <= M^2 / (Gamma(1-a) (1+a) K^{1+a}).
    double tail = coeff_bound * coeff_bound /
                  (std::tgamma(1.0 - a) * (1.0 + a) * std::pow(double(terms), 1.0 + a));
    if (tail > tail_tol)
        throw std::runtime_error("energy_fourier_bounds: tail estimate " + std::to_string(tail) +
                                 " above tolerance; increase terms");

    KahanSum lower;
    lower.add(1.0); // k = 0: |mu^(0)|^2 = 1
    for (long k = 1; k <= terms; ++k)
        lower.add(binomial_series_coeff(k, a) * std::norm(fourier_coefficient(mu, k)));
    double lo = lower.value();
    return {lo, real_lower_constant(a1) * lo};
}

} // namespace rcap

#endif
