#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hetmarket {

// Buyer acceptance rule: probability f(x) of accepting a variant whose fit
// cost is x, given the unit selling price.
struct AcceptanceFunction {
    enum class Kind { linear, step, constant };

    Kind kind = Kind::linear;
    double param = 0.0;   // p for linear/step, the fixed probability for constant

    static AcceptanceFunction linear(double p);
    static AcceptanceFunction step(double p);
    static AcceptanceFunction constant(double c);

    // f(x): linear is 1 - x/(2p) clamped to [0,1]; step is the indicator
    // x < p; constant ignores x.
    double operator()(double x) const;

    // E[f(x)] for x uniform on [0,1]: the per-(buyer,variant) acceptance
    // probability.  Equals param for linear (param <= 1/2) and step.
    double mean() const;
};

// Scalar market parameters.  M buyers face N variants; each buyer/variant
// fit cost and each variant production-fit cost is uniform on [0,1]; offering
// a variant costs Z and every sale earns `price`.
struct MarketParams {
    int M = 0;
    int N = 0;
    double p = 0.0;    // acceptance scale, 0 < p < 1/2
    double Z = 0.0;    // per-variant cost, Z >= 0
    AcceptanceFunction acceptance;   // defaults to linear(p)

    static constexpr double price = 1.0;

    MarketParams(int M, int N, double p, double Z);
    MarketParams(int M, int N, double p, double Z, AcceptanceFunction f);
};

// One market realization: x is the M x N buyer fit-cost matrix (row-major),
// y the variant costs sorted ascending (y[0] is the cheapest variant).
struct CostMatrix {
    int M = 0;
    int N = 0;
    std::vector<double> x;
    std::vector<double> y;

    double xat(int buyer, int variant) const {
        return x[static_cast<std::size_t>(buyer) * static_cast<std::size_t>(N) + static_cast<std::size_t>(variant)];
    }
};

// Independent uniform draws for all costs; y sorted ascending with exact ties
// re-drawn so the order is strict.
CostMatrix sample_uncorrelated(const MarketParams& params, std::uint64_t seed);

class Rng;

// N independent uniforms sorted ascending, exact ties re-drawn.
std::vector<double> sample_sorted_costs(int N, Rng& rng);

// Bernoulli acceptance decision given pre-drawn uniforms: x is the fit cost,
// u the acceptance coin.  For the step rule the coin is ignored and the
// decision is deterministic in x.
bool accept(const AcceptanceFunction& f, double x, double u);

// Vendor profit for per-variant sale counts over the k cheapest variants:
// sum_a counts[a] * (price - y[a]) - k * Z.  counts.size() must equal k.
double profit(std::span<const long> counts, std::span<const double> y, int k, double Z);

// Sales of one realization: counts[a] buyers bought variant a (0-based in
// ascending-cost order), k variants offered.
struct SaleOutcome {
    std::vector<long> counts;
    int k = 0;
    double profit = 0.0;
};

} // namespace hetmarket
