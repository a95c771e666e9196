#ifndef RCAP_DIRICHLET_HPP_
#define RCAP_DIRICHLET_HPP_

#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "rcap/kernel.hpp"
#include "rcap/quadrature.hpp"

namespace rcap {

/// Truncated Taylor coefficients of a holomorphic function on the disc.
struct PowerSeries {
    std::vector<std::complex<double>> coefficients; // a_0 .. a_M
    std::string tail_note;

    long truncation_degree() const { return long(coefficients.size()) - 1; }

    std::complex<double> eval(std::complex<double> z) const {
        std::complex<double> acc = 0.0;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    static PowerSeries monomial(long k) {
        PowerSeries f;
        f.coefficients.assign(std::size_t(k) + 1, 0.0);
        f.coefficients.back() = 1.0;
        return f;
    }

    static PowerSeries from_real(const std::vector<double>& a) {
        PowerSeries f;
        f.coefficients.assign(a.begin(), a.end());
        return f;
    }
};

struct DNormResult {
    double value;         // sqrt of the truncated weighted sum
    bool divergence_flag; // partial sums kept growing under truncation doubling
};

/// Truncated D_alpha norm sqrt(sum (k+1)^alpha |a_k|^2), any real alpha.
/// The divergence flag compares the last two doubling increments of the
/// partial sums: a convergent tail makes them shrink geometrically.
inline DNormResult dnorm_series(const PowerSeries& f, double alpha) {
    const auto& a = f.coefficients;
    std::size_t m = a.size();
    KahanSum s;
    auto partial_to = [&](std::size_t end) {
        KahanSum p;
        for (std::size_t k = 0; k < end; ++k)
            p.add(std::pow(double(k + 1), alpha) * std::norm(a[k]));
        return p.value();
    };
    for (std::size_t k = 0; k < m; ++k) s.add(std::pow(double(k + 1), alpha) * std::norm(a[k]));
    double full = s.value();
    bool flag = false;
    if (m >= 16) {
        double s_half = partial_to(m / 2);
        double s_quarter = partial_to(m / 4);
        double inc1 = full - s_half, inc0 = s_half - s_quarter;
        if (inc0 > 1e-12 * std::max(1.0, full) && inc1 > 0.9 * inc0) flag = true;
    }
    return {std::sqrt(full), flag};
}

/// Area-integral membership surrogate int_D |f'(z)|^2 (1-|z|^2)^{1-alpha} dA,
/// tensor quadrature: trapezoid in angle (doubled until settled), graded
/// Gauss-Legendre panels in the radial u = r^2 variable toward u = 1 where
/// the weight is merely Hoelder smooth.
inline double dnorm_area(const std::function<std::complex<double>(std::complex<double>)>& fprime,
                         double alpha, double quad_tol = 1e-10) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("dnorm_area: alpha must lie in (0,1]");
    auto value_at = [&](int ntheta) {
        auto radial = [&](double u) {
            double r = std::sqrt(u);
            double s = 0.0;
            for (int i = 0; i < ntheta; ++i) {
                double th = 2.0 * M_PI * double(i) / double(ntheta);
                s += std::norm(fprime(std::complex<double>(r * std::cos(th), r * std::sin(th))));
            }
            return (s / double(ntheta)) * std::pow(1.0 - u, 1.0 - alpha);
        };
        return M_PI * integrate_graded(radial, 0.0, 1.0, 52);
    };
    int ntheta = 32;
    double prev = value_at(ntheta);
    while (ntheta <= (1 << 14)) {
        ntheta *= 2;
        double cur = value_at(ntheta);
        if (std::fabs(cur - prev) <= quad_tol * (1.0 + std::fabs(cur))) return cur;
        prev = cur;
    }
    throw std::runtime_error("dnorm_area: quadrature did not converge; estimate " +
                             std::to_string(prev));
}

/// Optimal polynomial approximant of degree n: minimizes ||p f - 1||_alpha
/// over polynomials p of degree <= n at truncation degree M.
/// Normal equations: G_{jk} = sum_m (m+1)^alpha f_{m-j} conj(f_{m-k}),
/// b_j = <1, z^j f> = conj(f_0) delta_{j0}; distance^2 = 1 - b* G^{-1} b.
struct OPAResult {
    double distance;
    std::vector<std::complex<double>> polynomial;
};

inline OPAResult opa_distance(const PowerSeries& f, double alpha, long n, long M) {
    long degf = f.truncation_degree();
    if (M < n + degf) throw std::invalid_argument("opa_distance: truncation M too small");
    bool zero = true;
    for (const auto& c : f.coefficients)
        if (c != std::complex<double>(0.0)) zero = false;
    if (zero) throw std::invalid_argument("opa_distance: f is identically zero");

    auto coeff = [&](long k) -> std::complex<double> {
        return (k >= 0 && k <= degf) ? f.coefficients[std::size_t(k)] : 0.0;
    };
    const long dim = n + 1;
    Eigen::MatrixXcd G(dim, dim);
    for (long j = 0; j < dim; ++j) {
        for (long k = j; k < dim; ++k) {
            std::complex<double> s = 0.0;
            for (long m = 0; m <= M; ++m)
                s += std::pow(double(m + 1), alpha) * coeff(m - j) * std::conj(coeff(m - k));
            G(j, k) = s;
            G(k, j) = std::conj(s);
        }
    }
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(dim);
    b(0) = std::conj(f.coefficients[0]);

    Eigen::LLT<Eigen::MatrixXcd> llt(G);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("opa_distance: Gram matrix numerically singular");
    Eigen::VectorXcd p = llt.solve(b);
    p += llt.solve(b - G * p); // one step of iterative refinement
    double dist2 = 1.0 - (b.adjoint() * p).real()(0);
    OPAResult res;
    res.distance = std::sqrt(std::max(0.0, dist2));
    res.polynomial.assign(p.data(), p.data() + dim);
    return res;
}

/// Per-alpha table of OPA distances over a degree list.
struct OPAReport {
    double alpha;
    std::vector<long> degrees;
    std::vector<double> distances;
    std::vector<std::vector<std::complex<double>>> polynomials;
    std::string trend_note; // finite-degree diagnostic only, not a cyclicity verdict
};

inline std::vector<OPAReport> opa_sweep(const PowerSeries& f, const std::vector<double>& alphas,
                                        const std::vector<long>& degrees, long M) {
    std::vector<OPAReport> reports;
    for (double a : alphas) {
        OPAReport rep;
        rep.alpha = a;
        for (long n : degrees) {
            auto r = opa_distance(f, a, n, M);
            rep.degrees.push_back(n);
            rep.distances.push_back(r.distance);
            rep.polynomials.push_back(std::move(r.polynomial));
        }
        rep.trend_note = "finite-degree distances; no cyclicity verdict implied";
        reports.push_back(std::move(rep));
    }
    return reports;
}

inline std::string opa_reports_csv(const std::vector<OPAReport>& reports) {
    std::ostringstream os;
    os.precision(17);
    os << "alpha,degree,distance\n";
    for (const auto& r : reports)
        for (std::size_t i = 0; i < r.degrees.size(); ++i)
            os << r.alpha << "," << r.degrees[i] << "," << r.distances[i] << "\n";
    return os.str();
}

inline nlohmann::json opa_reports_json(const std::vector<OPAReport>& reports) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json jr;
        jr["alpha"] = r.alpha;
        jr["degrees"] = r.degrees;
        jr["distances"] = r.distances;
        jr["trend_note"] = r.trend_note;
        nlohmann::json polys = nlohmann::json::array();
        for (const auto& p : r.polynomials) {
            nlohmann::json jp = nlohmann::json::array();
            for (const auto& c : p) jp.push_back({c.real(), c.imag()});
            polys.push_back(jp);
        }
        jr["polynomials"] = polys;
        j.push_back(jr);
    }
    return j;
}

} // namespace rcap

#endif
