#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hetmarket/analytic.hpp"
#include "hetmarket/solve.hpp"

using namespace hetmarket;

TEST_CASE("integer argmax with smallest-index tie breaking") {
    const ArgmaxResult peak = argmax_k([](int k) { return -(k - 7) * (k - 7); }, 20);
    CHECK(peak.k == 7);
    CHECK(peak.value == 0.0);
    // plateau: first maximizer wins
    const ArgmaxResult flat = argmax_k([](int k) { return k >= 3 ? 1.0 : 0.0; }, 20);
    CHECK(flat.k == 3);
    // everywhere-negative objective still admits the k = 0 boundary
    const ArgmaxResult idle = argmax_k([](int k) { return -1.0 - k; }, 20);
    CHECK(idle.k == 0);
    CHECK(idle.value == -1.0);
    CHECK(argmax_k([](int) { return 5.0; }, 0).k == 0);
    CHECK_THROWS_AS(argmax_k([](int) { return 0.0; }, -1), std::invalid_argument);
}

TEST_CASE("symmetric duopoly settles on equal shelves") {
    const EquilibriumResult eq = duopoly_equilibrium(500, 0.05, 5.0, 5.0, 2000);
    CHECK(eq.converged);
    CHECK(eq.k1 == eq.k2);
    CHECK(eq.k1 > 0);
    CHECK(eq.X1 == eq.X2);
    CHECK(eq.X1 > 0.0);
    CHECK(eq.sweeps < 10000);
    // fixed point = mutual best response under fresh full scans
    const int br1 = argmax_k(
        [&](int k) { return duopoly_profits(500, 0.05, k, eq.k2, 5.0, 5.0).first; }, 2000).k;
    const int br2 = argmax_k(
        [&](int k) { return duopoly_profits(500, 0.05, eq.k1, k, 5.0, 5.0).second; }, 2000).k;
    CHECK(br1 == eq.k1);
    CHECK(br2 == eq.k2);
}

TEST_CASE("a priced-out rival leaves a monopoly problem") {
    const EquilibriumResult eq = duopoly_equilibrium(500, 0.05, 5.0, 1e6, 2000);
    CHECK(eq.converged);
    CHECK(eq.k2 == 0);
    const ArgmaxResult mono = argmax_k(
        [&](int k) { return duopoly_profits(500, 0.05, k, 0, 5.0, 1e6).first; }, 2000);
    CHECK(eq.k1 == mono.k);
    // the solo objective is the exponential-form monopoly profit
    CHECK(std::abs(mono.k - kopt_uninformed(MarketParams(500, 2000, 0.05, 5.0)).k_opt) <= 1.0);
}

TEST_CASE("asymmetric costs favor the cheaper vendor") {
    const EquilibriumResult eq = duopoly_equilibrium(500, 0.05, 5.0, 10.0, 2000);
    CHECK(eq.converged);
    CHECK(eq.k1 > eq.k2);
    CHECK(eq.X1 > eq.X2);
}

TEST_CASE("rising own cost eventually forces an exit") {
    int last_active = 0;
    int first_idle = 0;
    for (int z1 = 1; z1 <= 24; ++z1) {
        const EquilibriumResult eq = duopoly_equilibrium(500, 0.05, z1, 5.0, 2000);
        if (eq.k1 >= 1) last_active = z1;
        else if (first_idle == 0) first_idle = z1;
    }
    CHECK(last_active >= 1);
    CHECK(first_idle > last_active);
    const double priceout = duopoly_priceout(500, 0.05, 5.0);
    CHECK(last_active <= priceout + 1.0);
    CHECK(first_idle >= priceout - 1.0);
}
