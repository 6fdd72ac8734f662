#pragma once

#include <utility>
#include <vector>

#include "hetmarket/market.hpp"

namespace hetmarket {

// Probability that a buyer accepts at least one of k independent variants,
// each accepted with probability p.  Exact form 1-(1-p)^k by default; the
// large-k approximation 1-exp(-pk) behind the flag.
double accept_any_of_k(double p, int k, bool exponential_approx = false);

// Expected profit of an uninformed vendor offering the k cheapest variants:
//   M (1 - e^{-pk}) (1 - (1+k)/(2(N+1))) - kZ.
double profit_uninformed(const MarketParams& params, int k);

struct KoptResult {
    double k_opt = 0.0;   // continuous optimum
    double x_opt = 0.0;   // profit at the optimum
    bool idle = false;    // Z >= Mp: staying out of the market is optimal
};

// Continuous optimum of the uninformed profit in the N >> k regime:
//   k_opt = (1/p) ln(Mp/Z),  X_opt = M - (Z/p)(1 + ln(Mp/Z)),
// with the idle case k_opt = 0 when Z >= Mp.
KoptResult kopt_uninformed(const MarketParams& params);

// Expected sales of the alpha-th variant (1-based, ascending cost) when
// variants are offered sequentially and satisfied buyers leave:
//   M p (1-p)^{alpha-1}.
double sequential_sales(int M, double p, int alpha);

// Last variant index that still pays for itself under sequential offering:
//   ln(Z/(Mp)) / ln(1-p), clamped to 0 when Z >= Mp.
double kopt_sequential(int M, double p, double Z);

// Profit advantage of sequential offering over simultaneous offering at the
// respective optima:  Z (1 + ln(Mp/Z)) / (N p^2).  Requires 0 < Z < Mp.
double sequential_profit_gain(int M, int N, double p, double Z);

// Expected profits of two vendors offering k1 and k2 distinct variants with
// per-variant costs Z1 and Z2; buyers pick uniformly among acceptable
// variants, so expected sales split in proportion to k_i:
//   X_i = M (1 - e^{-p(k1+k2)}) k_i/(k1+k2) - k_i Z_i.
std::pair<double, double> duopoly_profits(int M, double p, int k1, int k2,
                                          double Z1, double Z2);

// Cost level at which vendor 1 is squeezed out of the duopoly:
//   Z1* = (Mp / ln(Mp/Z2)) (1 - Z2/(Mp)).  Requires 0 < Z2 < Mp.
double duopoly_priceout(int M, double p, double Z2);

// Density of the most-sold variant's sale count for an informed vendor, from
// the Gaussian approximation of per-variant sales:
//   f(m) = N phi(z)/sigma * Phi(z)^{N-1},  z = (m - Mp)/sigma,
// with sigma^2 = Mp(1-p).
double extremal_density(double m, int M, double p, int N);

// Location of the extremal-density peak:
//   m* = Mp + sigma sqrt(2 ln(sigma^3 N / sqrt(2 pi))).
// Throws std::domain_error when the logarithm is negative.
double most_probable_max_sale(int M, double p, int N);

// Relative sales advantage of an informed vendor picking the best variant:
//   delta = sqrt( ln(p M N^2 / (2 pi)) / (Mp) ).
// Throws std::domain_error when the logarithm is negative.
double informed_gain(int M, double p, int N);

// Buyer-taste/vendor-cost correlated market (grid-cost generator, aligned
// sign, step acceptance).  Probability that one buyer accepts variant alpha
// (1-based):  clamp((p - t (alpha-1)/(N-1)) / (1-t), 0, 1), with the t = 1
// limit equal to the indicator ybar_alpha < p.  The simplified flag replaces
// (alpha-1)/(N-1) by alpha/N.
double corr_accept_prob(int alpha, int N, double p, double t, bool simplified = false);

// Probability that a buyer accepts none of the k cheapest variants: the
// exact product prod_{alpha<=k} (1 - P_A(alpha)), or exp(-sum P_A) behind
// the flag.
double corr_deny_prob(int k, int N, double p, double t, bool exponential_approx = false);

// Expected vendor profit in the correlated market with k variants offered:
// buyers accept each variant with P_A(alpha), buy exactly one acceptable
// variant chosen uniformly, so expected sales of alpha are
//   M * P_A(alpha)/sum_A * (1 - P_D);
// profit subtracts k Z against grid costs ybar_alpha = (alpha-1)/(N-1).
double corr_expected_profit(const MarketParams& params, double t, int k);

// First variant (1-based) with any buyer demand when tastes anti-align with
// costs (s = -1): cheap variants are unacceptable to everyone below this
// index because even the best-matched buyer cost t (N-alpha)/(N-1) reaches p.
int alpha_min(int N, double p, double t);

// Matching market (d cheapest variants offered to M buyers who rank variants
// by fit): density of the best offered variant's buyer-consensus rank b,
//   f(b) = [1 - ((b-1)/N)^M]^d * M (d/N) (b/N)^{M-1}.
double matching_b_density(int b, int N, int M, int d);

struct MatchingMeans {
    double mean_b = 0.0;   // consensus rank of the chosen variant
    double mean_y = 0.0;   // production cost of the chosen variant
    double mean_x = 0.0;   // buyer fit cost of the chosen variant
};

// Asymptotic means for the matching market:
//   <b> = N Gamma(1/M)/M d^{-1/M},  <y> = (1+d)/(2N),
//   <x> = (M+1) Gamma(1/M)/(2 M^2) d^{-1/M}.
MatchingMeans matching_means(int N, int M, int d);

struct MultiVariantB {
    std::vector<double> pmf;    // pmf[i] = P(b = i+1), b in 1..N-d+1
    double mean_exact = 0.0;    // sum over the pmf; equals (N+1)/(d+1)
    double closed_form = 0.0;   // (N+1)/(d+1) - d/C(N,d), kept for comparison
};

// Law of the best rank b among a uniformly random d-subset of N ranks:
//   P(b) = d/(N-b+1) * prod_{j<b} (1 - d/(N-j+1)).
MultiVariantB multi_variant_b(int N, int d);

} // namespace hetmarket
