#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <vector>

#include "hetmarket/analytic.hpp"
#include "hetmarket/simulate.hpp"

using namespace hetmarket;

namespace {

double z_gap(const Stat& st, double target) {
    return st.se > 0.0 ? std::abs(st.mean - target) / st.se : std::abs(st.mean - target);
}

struct ThreadEnvGuard {
    std::string saved;
    bool had = false;
    ThreadEnvGuard() {
        if (const char* v = std::getenv("HETMARKET_THREADS")) {
            saved = v;
            had = true;
        }
    }
    ~ThreadEnvGuard() {
        if (had) ::setenv("HETMARKET_THREADS", saved.c_str(), 1);
        else ::unsetenv("HETMARKET_THREADS");
    }
};

} // namespace

TEST_CASE("simultaneous offering matches the closed-form profit") {
    const MarketParams params(500, 2000, 0.05, 5.0);
    const RunSummary run = sim_uninformed(params, 10, 400, 11);
    CHECK(run.realizations == 400u);
    // the simulation is unbiased for the exact-coverage expectation; the
    // closed form's exponential coverage sits a few units below it
    const double margin = 1.0 - 11.0 / (2.0 * 2001.0);
    const double exact = params.M * accept_any_of_k(params.p, 10) * margin - 10.0 * params.Z;
    CHECK(z_gap(run.scalar("profit"), exact) < 4.0);
    CHECK(exact - profit_uninformed(params, 10) == doctest::Approx(3.886).epsilon(0.01));
    const auto& sales = run.series_of("sales");
    REQUIRE(sales.size() == 10u);
    double total = 0.0;
    for (const Stat& st : sales) total += st.mean;
    CHECK(total <= params.M);
    // all offered variants face the same acceptance law, so expected sales
    // are flat across the shelf
    CHECK(z_gap(sales.front(), total / 10.0) < 4.0);
    CHECK_THROWS_AS(run.scalar("nope"), std::out_of_range);
    CHECK_THROWS_AS(run.series_of("nope"), std::out_of_range);
    CHECK_THROWS_AS(sim_uninformed(params, -1, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(sim_uninformed(params, 2001, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(sim_uninformed(params, 10, 0, 1), std::invalid_argument);
}

TEST_CASE("revenue scan: zero start, monotone growth, prefix consistency") {
    const MarketParams params(300, 800, 0.05, 2.0);
    const RunSummary scan = sim_uninformed_scan(params, 12, 500, 5);
    const auto& revenue = scan.series_of("revenue");
    REQUIRE(revenue.size() == 13u);
    CHECK(revenue[0].mean == 0.0);
    for (std::size_t k = 1; k < revenue.size(); ++k)
        CHECK(revenue[k].mean >= revenue[k - 1].mean);
    // the k-th prefix is distributed like a fresh k-variant run
    const RunSummary direct = sim_uninformed(params, 12, 500, 77);
    const double scan_profit = revenue[12].mean - 12 * params.Z;
    const Stat& direct_profit = direct.scalar("profit");
    const double joint_se = std::hypot(revenue[12].se, direct_profit.se);
    CHECK(std::abs(scan_profit - direct_profit.mean) < 4.0 * joint_se);
}

TEST_CASE("sequential offering: geometric sales decay and greedy stopping") {
    const MarketParams params(500, 2000, 0.05, 5.0);
    const RunSummary fixed = sim_sequential(params, FixedK{20}, 500, 9);
    const auto& sales = fixed.series_of("sales");
    REQUIRE(sales.size() == 20u);
    for (int a = 1; a <= 20; ++a)
        CHECK(z_gap(sales[static_cast<std::size_t>(a - 1)],
                    sequential_sales(params.M, params.p, a)) < 4.5);

    const MarketParams big(10000, 2000, 0.05, 100.0);
    const RunSummary greedy = sim_sequential(big, GreedyRule{}, 300, 9);
    const Stat& stop = greedy.scalar("stop_k");
    // finite-M stopping sits within a couple of variants of the threshold rule
    CHECK(std::abs(stop.mean - kopt_sequential(big.M, big.p, big.Z)) <= 2.0);
    CHECK(greedy.scalar("profit").mean > 0.0);
}

TEST_CASE("duopoly split conserves the pooled market") {
    const MarketParams params(500, 2000, 0.05, 0.0);
    const int k1 = 15, k2 = 15;
    const RunSummary run = sim_duopoly(params, 5.0, 5.0, k1, k2, 500, 31);
    CHECK(run.scalar("sales1").mean + run.scalar("sales2").mean <= params.M);
    // pooled profit is exactly an uninformed run at k1 + k2 variants
    //(exact coverage, since the simulation carries no exponential shortcut)
    const double pooled_margin = 1.0 - (k1 + k2 + 1) / (2.0 * 2001.0);
    const double expect =
        params.M * accept_any_of_k(params.p, k1 + k2) * pooled_margin - (k1 + k2) * 5.0;
    const Stat& x1 = run.scalar("X1");
    const Stat& x2 = run.scalar("X2");
    const double total = x1.mean + x2.mean;
    const double joint_se = std::hypot(x1.se, x2.se);   // conservative: halves anticorrelate
    CHECK(std::abs(total - expect) < 5.0 * joint_se);
    // vendor 1 holds the cheaper half of the pooled shelf
    CHECK(x1.mean > x2.mean);
    CHECK_THROWS_AS(sim_duopoly(params, 5.0, 5.0, 1500, 600, 10, 1), std::invalid_argument);
}

TEST_CASE("best-seller statistics of an informed vendor") {
    const MarketParams params(500, 2000, 0.05, 1.0);
    const RunSummary run = sim_informed_max(params, 1000, 13);
    // exact expectation of the max over 2000 binomial(500, 0.05) columns
    CHECK(z_gap(run.scalar("m_mean"), 43.2552576131008) < 4.0);
    CHECK(run.scalar("m_mode").mean >= 35.0);
    CHECK(run.scalar("m_mode").mean <= 55.0);
    const auto& pmf = run.series_of("m_pmf");
    double total = 0.0;
    for (const Stat& st : pmf) total += st.mean;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    const Stat& delta = run.scalar("delta_hat");
    CHECK(delta.mean == doctest::Approx((run.scalar("m_mean").mean - 25.0) / 25.0).epsilon(1e-12));
}

TEST_CASE("correlated market at t = 0 reduces to independent tastes") {
    const MarketParams params(500, 2000, 0.05, 1.0);
    const RunSummary run = sim_correlated(params, Scheme::B, 0.0, 1.0, 20, 400, 3);
    CHECK(z_gap(run.scalar("profit"), corr_expected_profit(params, 0.0, 20)) < 4.0);
    const Stat& coverage = run.scalar("coverage");
    CHECK(coverage.mean >= 0.0);
    CHECK(coverage.mean <= 1.0);
    CHECK(z_gap(coverage, accept_any_of_k(params.p, 20)) < 4.0);
}

TEST_CASE("correlated scan agrees with the direct correlated run") {
    const MarketParams params(300, 500, 0.05, 1.0);
    const RunSummary scan = sim_correlated_scan(params, Scheme::B, 0.5, 1.0, 15, 400, 7);
    const auto& revenue = scan.series_of("revenue");
    REQUIRE(revenue.size() == 16u);
    const RunSummary direct = sim_correlated(params, Scheme::B, 0.5, 1.0, 15, 400, 19);
    const double scan_profit = revenue[15].mean - 15 * params.Z;
    const double joint = std::hypot(revenue[15].se, direct.scalar("profit").se);
    CHECK(std::abs(scan_profit - direct.scalar("profit").mean) < 4.0 * joint);
}

TEST_CASE("anti-aligned tastes leave cheap variants unsold") {
    const MarketParams params(200, 2000, 0.05, 1.0);
    const RunSummary run = sim_correlated(params, Scheme::B, 0.1, -1.0, 100, 50, 23);
    const auto& sales = run.series_of("sales");
    for (const Stat& st : sales) CHECK(st.mean == 0.0);
    CHECK(run.scalar("coverage").mean == 0.0);
}

TEST_CASE("matching market: tiny cases with exact law") {
    // single buyer, both variants offered: the buyer's favorite always wins
    const RunSummary run = sim_matching(2, 1, 2, 4000, 41);
    CHECK(run.scalar("b").mean == 1.0);
    CHECK(z_gap(run.scalar("vendor_rank"), 1.5) < 4.0);
    CHECK(z_gap(run.scalar("x"), 1.0 / 3.0) < 4.0);   // min of two uniforms
    CHECK_THROWS_AS(sim_matching(10, 2, 11, 10, 1), std::invalid_argument);
}

TEST_CASE("multi-variant choice: best-rank law and buyer cost") {
    const RunSummary run = sim_multi_variant(20, 6, 3000, 47);
    const MultiVariantB law = multi_variant_b(20, 6);
    CHECK(z_gap(run.scalar("b"), law.mean_exact) < 4.0);
    CHECK(z_gap(run.scalar("x"), 1.0 / 7.0) < 4.0);
    const auto& pmf = run.series_of("b_pmf");
    double total = 0.0;
    for (const Stat& st : pmf) total += st.mean;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(pmf.size() >= 3u);
    CHECK(z_gap(pmf[0], law.pmf[0]) < 4.0);
    // crowding many buyers onto one realization leaves the per-buyer law alone
    const RunSummary crowd = sim_multi_variant(20, 6, 800, 47, 25);
    CHECK(z_gap(crowd.scalar("b"), law.mean_exact) < 4.0);
    const double spread = std::abs(crowd.scalar("x").mean - run.scalar("x").mean);
    CHECK(spread < 3.0 * std::hypot(crowd.scalar("x").se, run.scalar("x").se));
}

TEST_CASE("summaries are reproducible and thread-count independent") {
    ThreadEnvGuard guard;
    const MarketParams params(100, 300, 0.05, 2.0);
    ::setenv("HETMARKET_THREADS", "1", 1);
    const RunSummary one = sim_uninformed_scan(params, 8, 60, 123);
    const RunSummary one_again = sim_uninformed_scan(params, 8, 60, 123);
    ::setenv("HETMARKET_THREADS", "7", 1);
    const RunSummary many = sim_uninformed_scan(params, 8, 60, 123);
    const auto& a = one.series_of("revenue");
    const auto& b = one_again.series_of("revenue");
    const auto& c = many.series_of("revenue");
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].mean == b[i].mean);
        CHECK(a[i].se == b[i].se);
        CHECK(a[i].mean == c[i].mean);
        CHECK(a[i].se == c[i].se);
    }
    // and a different master seed moves the numbers
    const RunSummary other = sim_uninformed_scan(params, 8, 60, 124);
    CHECK(other.series_of("revenue")[8].mean != a[8].mean);
}
