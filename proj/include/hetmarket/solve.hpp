#pragma once

#include <array>
#include <functional>
#include <utility>

namespace hetmarket {

struct ArgmaxResult {
    int k = 0;
    double value = 0.0;
};

// Maximizes objective(k) over integer k in [0, k_max]; ties resolve toward
// the smaller k.
ArgmaxResult argmax_k(const std::function<double(int)>& objective, int k_max);

struct EquilibriumResult {
    int k1 = 0;
    int k2 = 0;
    double X1 = 0.0;
    double X2 = 0.0;
    bool converged = false;
    int sweeps = 0;
    // the two alternating states when best responses settle into a 2-cycle
    std::array<std::pair<int, int>, 2> cycle{};
};

// Alternating exact best responses on the duopoly profit forms, starting
// from (k1, k2) = (1, 1).  Stops at a fixed point, at a detected 2-cycle,
// or after 10^4 sweeps.
EquilibriumResult duopoly_equilibrium(int M, double p, double Z1, double Z2, int k_max);

} // namespace hetmarket
