#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "hetmarket/analytic.hpp"
#include "hetmarket/numeric.hpp"
#include "hetmarket/solve.hpp"

using namespace hetmarket;

namespace {
const MarketParams headline(500, 2000, 0.05, 5.0);
}

TEST_CASE("acceptance of at least one of k variants") {
    CHECK(accept_any_of_k(0.05, 0) == 0.0);
    CHECK(accept_any_of_k(0.05, 1) == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(accept_any_of_k(0.05, 10) == doctest::Approx(0.4012630607616213).epsilon(1e-12));
    // the exponential form is a lower bound and converges for small p
    CHECK(accept_any_of_k(0.05, 10, true) == doctest::Approx(1.0 - std::exp(-0.5)).epsilon(1e-12));
    CHECK(accept_any_of_k(0.05, 10, true) < accept_any_of_k(0.05, 10));
}

TEST_CASE("uninformed profit and its optimum") {
    CHECK(profit_uninformed(headline, 0) == 0.0);
    CHECK(profit_uninformed(headline, 32) == doctest::Approx(235.761209405199).epsilon(1e-12));
    const KoptResult kr = kopt_uninformed(headline);
    CHECK_FALSE(kr.idle);
    CHECK(kr.k_opt == doctest::Approx(32.18875824868201).epsilon(1e-12));
    CHECK(kr.x_opt == doctest::Approx(239.05620875658997).epsilon(1e-12));

    MarketParams idle_params(500, 2000, 0.05, 30.0);   // Z > Mp = 25
    const KoptResult ir = kopt_uninformed(idle_params);
    CHECK(ir.idle);
    CHECK(ir.k_opt == 0.0);
    CHECK(ir.x_opt == 0.0);
}

TEST_CASE("discrete argmax brackets the continuous optimum away from the boundary") {
    // the continuous forms drop the finite-N factor, so agreement holds when
    // the per-variant cost clearly dominates the shelf-depth correction
    for (const double Z : {2.0, 5.0, 10.0, 15.0, 20.0}) {
        MarketParams params(500, 2000, 0.05, Z);
        const KoptResult kr = kopt_uninformed(params);
        const ArgmaxResult am =
            argmax_k([&](int k) { return profit_uninformed(params, k); }, 200);
        CHECK(std::abs(am.k - kr.k_opt) <= 2.0);
        CHECK(am.value <= kr.x_opt);   // finite-N profit sits below the asymptote
    }
}

TEST_CASE("sequential offering closed forms") {
    CHECK(sequential_sales(500, 0.05, 1) == doctest::Approx(25.0).epsilon(1e-12));
    CHECK(sequential_sales(500, 0.05, 2) == doctest::Approx(23.75).epsilon(1e-12));
    CHECK(sequential_sales(500, 0.05, 30) ==
          doctest::Approx(25.0 * std::pow(0.95, 29)).epsilon(1e-12));
    CHECK(kopt_sequential(100000, 0.05, 1000.0) ==
          doctest::Approx(31.37716014638997).epsilon(1e-12));
    CHECK(kopt_sequential(500, 0.05, 30.0) == 0.0);   // Z above Mp: stop at once
    CHECK(sequential_profit_gain(500, 2000, 0.05, 5.0) ==
          doctest::Approx(5.0 * (1.0 + std::log(5.0)) / (2000.0 * 0.0025)).epsilon(1e-12));
    CHECK_THROWS_AS(sequential_profit_gain(500, 2000, 0.05, 0.0), std::domain_error);
    CHECK_THROWS_AS(sequential_profit_gain(500, 2000, 0.05, 25.0), std::domain_error);
}

TEST_CASE("duopoly profit split and price-out point") {
    const auto [x1, x2] = duopoly_profits(500, 0.05, 15, 15, 5.0, 5.0);
    CHECK(x1 == doctest::Approx(119.21745996289255).epsilon(1e-12));
    CHECK(x1 == x2);
    // revenue shares scale with shelf sizes
    const auto [a1, a2] = duopoly_profits(500, 0.05, 20, 10, 0.0, 0.0);
    CHECK(a1 == doctest::Approx(2.0 * a2).epsilon(1e-12));
    CHECK(duopoly_profits(500, 0.05, 0, 0, 5.0, 5.0).first == 0.0);
    CHECK(duopoly_priceout(500, 0.05, 5.0) ==
          doctest::Approx(12.426698691192238).epsilon(1e-12));
    CHECK_THROWS_AS(duopoly_priceout(500, 0.05, 0.0), std::domain_error);
    CHECK_THROWS_AS(duopoly_priceout(500, 0.05, 25.0), std::domain_error);
}

TEST_CASE("extremal density: normalization, peak, gain") {
    const int M = 500, N = 2000;
    const double p = 0.05;
    const double total = integrate([&](double m) { return extremal_density(m, M, p, N); },
                                   0.0, 120.0, 1e-10);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
    const double peak = most_probable_max_sale(M, p, N);
    CHECK(peak == doctest::Approx(48.304152887366946).epsilon(1e-12));
    // the closed-form peak keeps only the leading term of the stationarity
    // condition and overshoots the density's true argmax by ~17%
    double best_m = 0.0, best = 0.0;
    for (double m = 20.0; m <= 80.0; m += 0.01) {
        const double v = extremal_density(m, M, p, N);
        if (v > best) { best = v; best_m = m; }
    }
    CHECK(best_m > 40.0);
    CHECK(best_m < 42.5);
    CHECK(peak > best_m);
    CHECK(informed_gain(M, p, N) == doctest::Approx(0.8144397749997975).epsilon(1e-12));
    CHECK_THROWS_AS(most_probable_max_sale(2, 0.05, 50), std::domain_error);
    CHECK_THROWS_AS(informed_gain(2, 0.05, 7), std::domain_error);
}

TEST_CASE("correlated-taste acceptance probabilities") {
    CHECK(corr_accept_prob(1, 2000, 0.05, 0.5) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(corr_accept_prob(100, 2000, 0.05, 0.5) ==
          doctest::Approx(0.05047523761880941).epsilon(1e-12));
    CHECK(corr_accept_prob(500, 2000, 0.05, 0.5) == 0.0);   // clamped
    CHECK(corr_accept_prob(1, 2000, 0.05, 0.0) == doctest::Approx(0.05).epsilon(1e-12));
    // t = 1: indicator of the grid cost lying under p
    CHECK(corr_accept_prob(1, 2000, 0.05, 1.0) == 1.0);
    CHECK(corr_accept_prob(100, 2000, 0.05, 1.0) == 1.0);    // ybar = 99/1999 < 0.05
    CHECK(corr_accept_prob(101, 2000, 0.05, 1.0) == 0.0);
    // simplified index form shifts the grid by one step
    CHECK(corr_accept_prob(100, 2000, 0.05, 0.5, true) ==
          doctest::Approx((0.05 - 0.5 * 100.0 / 2000.0) / 0.5).epsilon(1e-12));
}

TEST_CASE("probability of accepting none of the k cheapest variants") {
    CHECK(corr_deny_prob(0, 2000, 0.05, 0.5) == 1.0);
    CHECK(corr_deny_prob(20, 2000, 0.05, 0.5) ==
          doctest::Approx(0.13506738801272586).epsilon(1e-12));
    CHECK(corr_deny_prob(20, 2000, 0.05, 0.5, true) ==
          doctest::Approx(0.14821506633752016).epsilon(1e-12));
    // the exponential shortcut overshoots by more than a percent here
    CHECK(corr_deny_prob(20, 2000, 0.05, 0.5, true) -
              corr_deny_prob(20, 2000, 0.05, 0.5) ==
          doctest::Approx(0.0131).epsilon(0.05));
}

TEST_CASE("correlated-market expected profit and its optimum") {
    CHECK(corr_expected_profit(headline, 0.25, 0) == 0.0);
    for (const auto& [t, k_expect] : {std::pair{0.25, 28}, {0.5, 22}, {0.75, 14}}) {
        const ArgmaxResult am =
            argmax_k([&](int k) { return corr_expected_profit(headline, t, k); }, 300);
        CHECK(am.k == k_expect);
    }
    CHECK(argmax_k([&](int k) { return corr_expected_profit(headline, 0.25, k); }, 300).value ==
          doctest::Approx(279.68600147192814).epsilon(1e-12));
    CHECK(argmax_k([&](int k) { return corr_expected_profit(headline, 0.5, k); }, 300).value ==
          doctest::Approx(331.7587988190355).epsilon(1e-12));
    CHECK(argmax_k([&](int k) { return corr_expected_profit(headline, 0.75, k); }, 300).value ==
          doctest::Approx(402.4427164138901).epsilon(1e-12));
}

TEST_CASE("first variant with demand under anti-aligned tastes") {
    CHECK(alpha_min(2000, 0.05, 0.1) == 1001);
    CHECK(alpha_min(2000, 0.05, 0.5) == 1801);
    // binding weak enough that every variant keeps demand
    CHECK(alpha_min(2000, 0.05, 0.04) == 1);
}

TEST_CASE("matching market closed forms") {
    double total = 0.0;
    for (int b = 1; b <= 1000; ++b) total += matching_b_density(b, 1000, 5, 10);
    CHECK(total == doctest::Approx(0.916000697218149).epsilon(1e-12));
    const MatchingMeans mm = matching_means(1000, 5, 10);
    CHECK(mm.mean_b == doctest::Approx(579.3253114892716).epsilon(1e-12));
    CHECK(mm.mean_x == doctest::Approx(0.34759518689356295).epsilon(1e-12));
    CHECK(mm.mean_y == doctest::Approx(0.0055).epsilon(1e-12));
}

TEST_CASE("best-rank law of a random d-subset") {
    const MultiVariantB law = multi_variant_b(100, 7);
    double total = 0.0;
    for (const double v : law.pmf) total += v;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(law.mean_exact == doctest::Approx(101.0 / 8.0).epsilon(1e-12));

    const MultiVariantB tiny = multi_variant_b(2, 1);
    REQUIRE(tiny.pmf.size() == 2u);
    CHECK(tiny.pmf[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(tiny.pmf[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(tiny.mean_exact == doctest::Approx(1.5).epsilon(1e-12));
    // the separate closed form misstates the boundary term; keep it exposed
    CHECK(tiny.closed_form == doctest::Approx(1.5 - 0.5).epsilon(1e-12));
}
