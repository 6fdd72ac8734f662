#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>

namespace hetmarket {

inline constexpr double pi_v = 3.141592653589793238462643383279503;

inline double normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * pi_v);
}

inline double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

// Adaptive Simpson quadrature with absolute tolerance `tol`.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

// Regularized incomplete gamma functions P(a,x) and Q(a,x) = 1 - P(a,x).
// Series expansion for x < a+1, Lentz continued fraction otherwise.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Upper tail of the chi-square distribution with `dof` degrees of freedom.
inline double chi2_sf(double stat, int dof) {
    if (dof <= 0) throw std::invalid_argument("chi2_sf: dof must be positive");
    if (stat <= 0.0) return 1.0;
    return gamma_q(0.5 * dof, 0.5 * stat);
}

// Asymptotic one-sample Kolmogorov-Smirnov critical value at level alpha.
inline double ks_critical(std::size_t n, double alpha) {
    return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

struct MeanSE {
    double mean = 0.0;
    double se = 0.0;   // standard error of the mean, sample sd / sqrt(n)
    double sd = 0.0;
    std::size_t n = 0;
};

// Two-pass mean / standard error over a sample; requires n >= 1 (se needs n >= 2).
MeanSE mean_se(std::span<const double> values);

} // namespace hetmarket
