#include "hetmarket/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "hetmarket/numeric.hpp"

namespace hetmarket {

double accept_any_of_k(double p, int k, bool exponential_approx) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("accept_any_of_k: p must be in [0,1]");
    if (k < 0) throw std::invalid_argument("accept_any_of_k: k must be non-negative");
    if (exponential_approx) return 1.0 - std::exp(-p * static_cast<double>(k));
    return 1.0 - std::pow(1.0 - p, static_cast<double>(k));
}

double profit_uninformed(const MarketParams& params, int k) {
    if (k < 0) throw std::invalid_argument("profit_uninformed: k must be non-negative");
    const double M = params.M;
    const double N = params.N;
    const double kk = k;
    return M * (1.0 - std::exp(-params.p * kk)) * (1.0 - (1.0 + kk) / (2.0 * (N + 1.0))) -
           kk * params.Z;
}

KoptResult kopt_uninformed(const MarketParams& params) {
    const double Mp = static_cast<double>(params.M) * params.p;
    if (params.Z >= Mp) return {0.0, 0.0, true};
    const double lg = std::log(Mp / params.Z);
    return {lg / params.p, static_cast<double>(params.M) - params.Z / params.p * (1.0 + lg), false};
}

double sequential_sales(int M, double p, int alpha) {
    if (alpha < 1) throw std::invalid_argument("sequential_sales: alpha must be at least 1");
    return static_cast<double>(M) * p * std::pow(1.0 - p, static_cast<double>(alpha - 1));
}

double kopt_sequential(int M, double p, double Z) {
    const double Mp = static_cast<double>(M) * p;
    if (Z >= Mp) return 0.0;
    return std::log(Z / Mp) / std::log1p(-p);
}

double sequential_profit_gain(int M, int N, double p, double Z) {
    const double Mp = static_cast<double>(M) * p;
    if (!(Z > 0.0 && Z < Mp))
        throw std::domain_error("sequential_profit_gain: requires 0 < Z < Mp");
    return Z * (1.0 + std::log(Mp / Z)) / (static_cast<double>(N) * p * p);
}

std::pair<double, double> duopoly_profits(int M, double p, int k1, int k2,
                                          double Z1, double Z2) {
    if (k1 < 0 || k2 < 0) throw std::invalid_argument("duopoly_profits: k1, k2 must be non-negative");
    const int K = k1 + k2;
    if (K == 0) return {0.0, 0.0};
    const double demand = static_cast<double>(M) * (1.0 - std::exp(-p * static_cast<double>(K)));
    const double per_variant = demand / static_cast<double>(K);
    return {per_variant * k1 - k1 * Z1, per_variant * k2 - k2 * Z2};
}

double duopoly_priceout(int M, double p, double Z2) {
    const double Mp = static_cast<double>(M) * p;
    if (!(Z2 > 0.0 && Z2 < Mp))
        throw std::domain_error("duopoly_priceout: requires 0 < Z2 < Mp");
    return Mp / std::log(Mp / Z2) * (1.0 - Z2 / Mp);
}

double extremal_density(double m, int M, double p, int N) {
    const double Mp = static_cast<double>(M) * p;
    const double sigma = std::sqrt(Mp * (1.0 - p));
    const double z = (m - Mp) / sigma;
    return static_cast<double>(N) * normal_pdf(z) / sigma * std::pow(normal_cdf(z), N - 1);
}

double most_probable_max_sale(int M, double p, int N) {
    const double Mp = static_cast<double>(M) * p;
    const double sigma = std::sqrt(Mp * (1.0 - p));
    const double arg = sigma * sigma * sigma * static_cast<double>(N) / std::sqrt(2.0 * pi_v);
    if (arg < 1.0)
        throw std::domain_error("most_probable_max_sale: sigma^3 N below sqrt(2 pi)");
    return Mp + sigma * std::sqrt(2.0 * std::log(arg));
}

double informed_gain(int M, double p, int N) {
    const double Mp = static_cast<double>(M) * p;
    const double arg = p * static_cast<double>(M) * static_cast<double>(N) *
                       static_cast<double>(N) / (2.0 * pi_v);
    if (arg < 1.0)
        throw std::domain_error("informed_gain: p M N^2 below 2 pi");
    return std::sqrt(std::log(arg) / Mp);
}

double corr_accept_prob(int alpha, int N, double p, double t, bool simplified) {
    if (N < 2) throw std::invalid_argument("corr_accept_prob: N must be at least 2");
    if (alpha < 1 || alpha > N) throw std::invalid_argument("corr_accept_prob: alpha out of range");
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("corr_accept_prob: t must be in [0,1]");
    const double ybar = simplified ? static_cast<double>(alpha) / static_cast<double>(N)
                                   : static_cast<double>(alpha - 1) / static_cast<double>(N - 1);
    if (t >= 1.0) return ybar < p ? 1.0 : 0.0;
    const double v = (p - t * ybar) / (1.0 - t);
    return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

double corr_deny_prob(int k, int N, double p, double t, bool exponential_approx) {
    if (k < 0 || k > N) throw std::invalid_argument("corr_deny_prob: k out of range");
    if (k == 0) return 1.0;
    if (exponential_approx) {
        const double kk = static_cast<double>(k);
        return std::exp(-p * kk / (1.0 - t) + t * kk * kk / (2.0 * N * (1.0 - t + p)));
    }
    double prod = 1.0;
    for (int a = 1; a <= k; ++a) prod *= 1.0 - corr_accept_prob(a, N, p, t);
    return prod;
}

double corr_expected_profit(const MarketParams& params, double t, int k) {
    if (k < 0 || k > params.N) throw std::invalid_argument("corr_expected_profit: k out of range");
    if (k == 0) return 0.0;
    const int N = params.N;
    double sum_accept = 0.0;
    for (int a = 1; a <= k; ++a) sum_accept += corr_accept_prob(a, N, params.p, t);
    const double kZ = static_cast<double>(k) * params.Z;
    if (sum_accept == 0.0) return -kZ;
    const double buy_prob = 1.0 - corr_deny_prob(k, N, params.p, t);
    double revenue = 0.0;
    for (int a = 1; a <= k; ++a) {
        const double share = corr_accept_prob(a, N, params.p, t) / sum_accept;
        const double ybar = static_cast<double>(a - 1) / static_cast<double>(N - 1);
        revenue += share * buy_prob * (MarketParams::price - ybar);
    }
    return static_cast<double>(params.M) * revenue - kZ;
}

int alpha_min(int N, double p, double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("alpha_min: t must be in [0,1]");
    if (!(p > 0.0)) throw std::invalid_argument("alpha_min: p must be positive");
    if (t == 0.0) return 1;
    // smallest alpha with t (N-alpha)/(N-1) < p
    const double threshold = static_cast<double>(N) - p * static_cast<double>(N - 1) / t;
    const int a = static_cast<int>(std::floor(threshold)) + 1;
    return a < 1 ? 1 : (a > N ? N : a);
}

double matching_b_density(int b, int N, int M, int d) {
    if (b < 1 || b > N) throw std::invalid_argument("matching_b_density: b out of range");
    const double nb = static_cast<double>(b) / static_cast<double>(N);
    const double miss = std::pow(static_cast<double>(b - 1) / static_cast<double>(N), M);
    return std::pow(1.0 - miss, d) * static_cast<double>(M) *
           (static_cast<double>(d) / static_cast<double>(N)) * std::pow(nb, M - 1);
}

MatchingMeans matching_means(int N, int M, int d) {
    if (M < 1 || d < 1 || d > N) throw std::invalid_argument("matching_means: bad arguments");
    const double g = std::tgamma(1.0 / static_cast<double>(M));
    const double dm = std::pow(static_cast<double>(d), -1.0 / static_cast<double>(M));
    MatchingMeans out;
    out.mean_b = static_cast<double>(N) * g / static_cast<double>(M) * dm;
    out.mean_y = (1.0 + static_cast<double>(d)) / (2.0 * static_cast<double>(N));
    out.mean_x = (static_cast<double>(M) + 1.0) * g /
                 (2.0 * static_cast<double>(M) * static_cast<double>(M)) * dm;
    return out;
}

MultiVariantB multi_variant_b(int N, int d) {
    if (d < 1 || d > N) throw std::invalid_argument("multi_variant_b: requires 1 <= d <= N");
    MultiVariantB out;
    out.pmf.resize(static_cast<std::size_t>(N - d + 1));
    double survive = 1.0;   // P(no offered variant among ranks < b)
    double mean = 0.0;
    for (int b = 1; b <= N - d + 1; ++b) {
        const double hit = static_cast<double>(d) / static_cast<double>(N - b + 1);
        const double pb = survive * hit;
        out.pmf[static_cast<std::size_t>(b - 1)] = pb;
        mean += static_cast<double>(b) * pb;
        survive *= 1.0 - hit;
    }
    out.mean_exact = mean;
    const double log_choose = std::lgamma(static_cast<double>(N) + 1.0) -
                              std::lgamma(static_cast<double>(d) + 1.0) -
                              std::lgamma(static_cast<double>(N - d) + 1.0);
    out.closed_form = (static_cast<double>(N) + 1.0) / (static_cast<double>(d) + 1.0) -
                      static_cast<double>(d) * std::exp(-log_choose);
    return out;
}

} // namespace hetmarket
