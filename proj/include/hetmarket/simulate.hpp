#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hetmarket/correlation.hpp"
#include "hetmarket/market.hpp"

namespace hetmarket {

struct Stat {
    double mean = 0.0;
    double se = 0.0;   // standard error across realizations (0 when R < 2)
};

// Monte Carlo output: named scalar quantities plus named per-index series
// (per-variant sales, rank frequencies, ...).  Results are bit-identical for
// a given seed regardless of the worker-thread count: realization r always
// uses the seed derived from (master_seed, r) and reductions run in
// realization order.
struct RunSummary {
    std::string scenario;
    std::uint64_t master_seed = 0;
    std::size_t realizations = 0;
    std::vector<std::pair<std::string, Stat>> scalars;
    std::vector<std::pair<std::string, std::vector<Stat>>> series;

    const Stat& scalar(std::string_view name) const;
    const std::vector<Stat>& series_of(std::string_view name) const;
};

// Uninformed vendor: offers the k cheapest variants simultaneously; each
// buyer buys one uniformly chosen acceptable variant.  Scalars: "profit".
// Series: "sales" (length k, ascending-cost order).
RunSummary sim_uninformed(const MarketParams& params, int k, int R, std::uint64_t seed);

// Same market, but records expected revenue (profit before variant costs)
// for every shelf size 0..k_max in one pass; profit(k) = revenue(k) - kZ for
// any Z.  Buyers keep a uniformly chosen pick among the variants accepted so
// far, so each k-prefix is distributed exactly as a fresh k-variant run.
// Series: "revenue" (length k_max+1).
RunSummary sim_uninformed_scan(const MarketParams& params, int k_max, int R, std::uint64_t seed);

// Sequential offering: variants appear one at a time in ascending cost
// order and satisfied buyers leave the market.
struct FixedK {
    int k = 0;
};
struct GreedyRule {};   // stop once a variant fails n (1 - y) >= Z
using Stopping = std::variant<FixedK, GreedyRule>;

// Scalars: "profit", and under GreedyRule "stop_k" = index of the last
// variant that covered its cost (the first failing variant is produced and
// included in the profit, matching a vendor who only learns by trying).
// Series under FixedK: "sales".
RunSummary sim_sequential(const MarketParams& params, Stopping stopping, int R, std::uint64_t seed);

// Two vendors share one buyer pool: vendor 1 offers the k1 cheapest
// variants, vendor 2 the next k2.  Scalars: "X1", "X2", "sales1", "sales2".
RunSummary sim_duopoly(const MarketParams& params, double Z1, double Z2,
                       int k1, int k2, int R, std::uint64_t seed);

// Informed vendor diagnostics: per realization, counts prospective
// acceptors of every variant and records the maximum m.  Scalars: "m_mean",
// "m_mode" (most frequent m; smallest on ties), "delta_hat" =
// (m_mean - Mp)/(Mp).  Series: "m_pmf" (empirical frequency of m = 0,1,...).
RunSummary sim_informed_max(const MarketParams& params, int R, std::uint64_t seed);

// Correlated market: buyer lists and vendor list from the given generator
// scheme; vendor offers its k cheapest variants; step acceptance at p.
// Scalars: "profit", "coverage" (fraction of buyers who bought).
// Series: "sales" (length k).
RunSummary sim_correlated(const MarketParams& params, Scheme scheme, double t, double s,
                          int k, int R, std::uint64_t seed);

// Revenue scan over shelf sizes 0..k_max for the correlated market, same
// prefix construction as sim_uninformed_scan.  Series: "revenue".
RunSummary sim_correlated_scan(const MarketParams& params, Scheme scheme, double t, double s,
                               int k_max, int R, std::uint64_t seed);

// Matching market: the vendor offers its d cheapest variants; each buyer
// ranks all N variants by fit cost and reports the rank of each offered
// variant; the variant whose worst report b_j is best wins (ties uniform at
// random).  Scalars: "b" (winning worst-rank), "vendor_rank" (1-based cost
// rank of the winner among the d offered), "x" (mean buyer fit cost of the
// winner), "y" (production cost of the winner).
RunSummary sim_matching(int N, int M, int d, int R, std::uint64_t seed);

// Single buyer facing a d-variant shelf drawn as the vendor's d cheapest of
// N: the buyer takes the best-fitting offered variant; b is its rank in the
// buyer's full preference order.  `buyers` samples per realization share the
// shelf.  Scalars: "b", "x".  Series: "b_pmf" (frequency of b = 1, 2, ...).
RunSummary sim_multi_variant(int N, int d, int R, std::uint64_t seed, int buyers = 1);

} // namespace hetmarket
