#include "hetmarket/solve.hpp"

#include <stdexcept>

#include "hetmarket/analytic.hpp"

namespace hetmarket {

ArgmaxResult argmax_k(const std::function<double(int)>& objective, int k_max) {
    if (k_max < 0) throw std::invalid_argument("argmax_k: k_max must be non-negative");
    ArgmaxResult best{0, objective(0)};
    for (int k = 1; k <= k_max; ++k) {
        const double v = objective(k);
        if (v > best.value) best = {k, v};
    }
    return best;
}

EquilibriumResult duopoly_equilibrium(int M, double p, double Z1, double Z2, int k_max) {
    constexpr int max_sweeps = 10000;
    EquilibriumResult out;
    int k1 = 1, k2 = 1;
    int prev1 = -1, prev2 = -1;       // state one sweep ago
    int prev21 = -1, prev22 = -1;     // state two sweeps ago
    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
        k1 = argmax_k([&](int k) { return duopoly_profits(M, p, k, k2, Z1, Z2).first; }, k_max).k;
        k2 = argmax_k([&](int k) { return duopoly_profits(M, p, k1, k, Z1, Z2).second; }, k_max).k;
        out.sweeps = sweep;
        if (k1 == prev1 && k2 == prev2) {
            out.converged = true;
            break;
        }
        if (k1 == prev21 && k2 == prev22) {
            // alternates between the previous state and this one
            out.cycle = {{{prev1, prev2}, {k1, k2}}};
            break;
        }
        prev21 = prev1;
        prev22 = prev2;
        prev1 = k1;
        prev2 = k2;
    }
    out.k1 = k1;
    out.k2 = k2;
    const auto [x1, x2] = duopoly_profits(M, p, k1, k2, Z1, Z2);
    out.X1 = x1;
    out.X2 = x2;
    return out;
}

} // namespace hetmarket
