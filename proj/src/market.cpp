#include "hetmarket/market.hpp"

#include <algorithm>
#include <stdexcept>

#include "hetmarket/rng.hpp"

namespace hetmarket {

AcceptanceFunction AcceptanceFunction::linear(double p) {
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("linear acceptance: p must be in (0,1]");
    return {Kind::linear, p};
}

AcceptanceFunction AcceptanceFunction::step(double p) {
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("step acceptance: p must be in (0,1]");
    return {Kind::step, p};
}

AcceptanceFunction AcceptanceFunction::constant(double c) {
    if (c < 0.0 || c > 1.0) throw std::invalid_argument("constant acceptance: c must be in [0,1]");
    return {Kind::constant, c};
}

double AcceptanceFunction::operator()(double x) const {
    switch (kind) {
        case Kind::linear: {
            const double f = 1.0 - x / (2.0 * param);
            return f > 0.0 ? (f < 1.0 ? f : 1.0) : 0.0;
        }
        case Kind::step:
            return x < param ? 1.0 : 0.0;
        case Kind::constant:
            return param;
    }
    return 0.0;
}

double AcceptanceFunction::mean() const {
    switch (kind) {
        case Kind::linear:
            // integral of max(0, 1 - x/(2p)) over [0,1]
            return 2.0 * param <= 1.0 ? param : 1.0 - 1.0 / (4.0 * param);
        case Kind::step:
            return param < 1.0 ? param : 1.0;
        case Kind::constant:
            return param;
    }
    return 0.0;
}

MarketParams::MarketParams(int M_, int N_, double p_, double Z_)
    : MarketParams(M_, N_, p_, Z_, AcceptanceFunction::linear(p_)) {}

MarketParams::MarketParams(int M_, int N_, double p_, double Z_, AcceptanceFunction f)
    : M(M_), N(N_), p(p_), Z(Z_), acceptance(f) {
    if (M <= 0) throw std::invalid_argument("MarketParams: M must be positive");
    if (N <= 0) throw std::invalid_argument("MarketParams: N must be positive");
    if (!(p > 0.0 && p < 0.5)) throw std::invalid_argument("MarketParams: p must satisfy 0 < p < 1/2");
    if (Z < 0.0) throw std::invalid_argument("MarketParams: Z must be non-negative");
}

CostMatrix sample_uncorrelated(const MarketParams& params, std::uint64_t seed) {
    Rng rng(seed);
    CostMatrix cm;
    cm.M = params.M;
    cm.N = params.N;
    cm.x.resize(static_cast<std::size_t>(params.M) * static_cast<std::size_t>(params.N));
    for (double& v : cm.x) v = rng.u01();
    cm.y = sample_sorted_costs(params.N, rng);
    return cm;
}

std::vector<double> sample_sorted_costs(int N, Rng& rng) {
    std::vector<double> y(static_cast<std::size_t>(N));
    for (double& v : y) v = rng.u01();
    std::sort(y.begin(), y.end());
    // exact ties would make the ascending order ambiguous; re-draw until strict
    for (;;) {
        bool tied = false;
        for (std::size_t a = 1; a < y.size(); ++a) {
            if (y[a] == y[a - 1]) {
                y[a] = rng.u01();
                tied = true;
            }
        }
        if (!tied) break;
        std::sort(y.begin(), y.end());
    }
    return y;
}

bool accept(const AcceptanceFunction& f, double x, double u) {
    if (f.kind == AcceptanceFunction::Kind::step) return x < f.param;
    return u < f(x);
}

double profit(std::span<const long> counts, std::span<const double> y, int k, double Z) {
    if (k < 0) throw std::invalid_argument("profit: k must be non-negative");
    if (counts.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("profit: counts.size() must equal k");
    if (y.size() < static_cast<std::size_t>(k))
        throw std::invalid_argument("profit: need at least k variant costs");
    double total = -static_cast<double>(k) * Z;
    for (int a = 0; a < k; ++a) {
        total += static_cast<double>(counts[static_cast<std::size_t>(a)]) *
                 (MarketParams::price - y[static_cast<std::size_t>(a)]);
    }
    return total;
}

} // namespace hetmarket
