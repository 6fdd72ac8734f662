#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace hetmarket {

// Kendall rank correlation of two equal-length lists, computed in
// O(N log N) by merge-sort inversion counting.  Throws std::invalid_argument
// on length mismatch, fewer than two elements, or ties within either list
// (the model draws continuous costs, so ties indicate caller error).
double kendall_tau(std::span<const double> xs, std::span<const double> ys);

// Squared Pearson correlation.  Throws on length mismatch or zero variance.
double pearson_r2(std::span<const double> xs, std::span<const double> ys);

// Triangle inequality for Kendall correlations: given tau(1,2) and tau(1,3),
// tau(2,3) must lie in [|t12+t13|-1, 1-|t12-t13|].  Returns {low, high}.
std::pair<double, double> tau_triangle_bounds(double t12, double t13);

// Returned by max_equicorrelated when tau0 == 1: identical lists can be
// replicated without limit.
inline constexpr int unbounded_lists = std::numeric_limits<int>::max();

// Which closed form to use for the equicorrelated list bound; `doubled_log`
// (2 + 2 log2 w) matches the worked six-list construction and is the default,
// `single_log` (2 + log2 w) kept for comparison.
enum class BoundForm { doubled_log, single_log };

// Largest number of length-N lists that can be pairwise equicorrelated at
// Kendall tau0.  Requires -1 <= tau0 <= 1 and N >= 2; result is clamped to
// at least 1 (a lone list satisfies any constraint vacuously).
int max_equicorrelated(double tau0, int N, BoundForm form = BoundForm::doubled_log);

// Correlated-taste generators.  Each produces M buyer lists of length N plus
// one vendor list, with inter-list correlation set by t in [0,1] and the
// buyer-vendor alignment sign s in {-1,+1}.
//   A: x = (1-t) a + t c,  y = (1-t) b + t c  (or t(1-c) when s = -1),
//      with a, b, c independent uniforms and c shared across lists.
//   B: y is the fixed grid (alpha-1)/(N-1); x = 1/2 + s t (y - 1/2)
//      + (1-t)(noise - 1/2).
//   C: Gaussian copula, x = Phi(sqrt(1-t) a + sqrt(t) c),
//      y = Phi(sqrt(1-t) b + s sqrt(t) c), with a, b, c standard normals.
enum class Scheme { A, B, C };

struct ListEnsemble {
    Scheme scheme;
    double t = 0.0;
    double s = 1.0;
    int M = 0;
    int N = 0;
    std::vector<std::vector<double>> lists;   // M buyer lists
    std::vector<double> y;                    // vendor list
};

ListEnsemble generate_scheme_A(int M, int N, double t, double s, std::uint64_t seed);
ListEnsemble generate_scheme_B(int M, int N, double t, double s, std::uint64_t seed);
ListEnsemble generate_scheme_C(int M, int N, double t, double s, std::uint64_t seed);
ListEnsemble generate_scheme(Scheme scheme, int M, int N, double t, double s, std::uint64_t seed);

// Which pair of lists an expected-tau value refers to: buyer-buyer or
// buyer-vendor.
enum class TauWhich { xx, xy };

// Large-N expectation of Kendall tau for each scheme.  In terms of
// u = t/(1-t) (schemes A and B; t = 1 handled as the exact limit):
//   xx, u <= 1:  (u^2/15)(10 - 6u + u^2)
//   xx, u  > 1:  (1/15)(15 - 14/u + 4/u^2)
//   A  xy:       s * tau_xx
//   B  xy, u<=1: (s/6)(4u - u^2);  u > 1: (s/6)(6 - 4/u + 1/u^2)
//   C  xx:       (2/pi) arcsin(t);  xy carries the sign s.
double expected_tau(Scheme scheme, double t, double s, TauWhich which);

// Ensemble variance of tau from one list pair via the sign-product moments
//   sigma_tau^2 = (4/N) (<s_ag s_gb> - <s_ab>^2).
// All ordered triples are enumerated when feasible, otherwise `max_triples`
// are subsampled with the given seed.
double tau_variance_estimate(std::span<const double> xs, std::span<const double> ys,
                             std::uint64_t seed = 1,
                             std::size_t max_triples = 1000000);

struct TauEstimate {
    double tau = 0.0;        // mean sample tau over the generated pairs
    double variance = 0.0;   // sample variance of tau across pairs
    int n_pairs = 0;
};

// Monte Carlo estimate of E[tau] for a scheme: generates `n_pairs`
// independent ensembles and averages the sample Kendall tau of the requested
// pair type (xx: two buyer lists; xy: buyer list vs vendor list).
TauEstimate sample_tau(Scheme scheme, double t, double s, TauWhich which,
                       int n_pairs, int N, std::uint64_t seed);

} // namespace hetmarket
