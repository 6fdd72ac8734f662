#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "hetmarket/market.hpp"
#include "hetmarket/rng.hpp"

using namespace hetmarket;

TEST_CASE("linear acceptance: shape, clamping, mean") {
    const auto f = AcceptanceFunction::linear(0.05);
    CHECK(f(0.0) == 1.0);
    CHECK(f(0.05) == doctest::Approx(0.5));
    CHECK(f(0.1) == 0.0);
    CHECK(f(0.7) == 0.0);   // clamped, never negative
    CHECK(f.mean() == doctest::Approx(0.05).epsilon(1e-12));
    CHECK_THROWS_AS(AcceptanceFunction::linear(0.0), std::invalid_argument);
    CHECK_THROWS_AS(AcceptanceFunction::linear(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(AcceptanceFunction::linear(1.5), std::invalid_argument);
}

TEST_CASE("step acceptance is a strict indicator") {
    const auto f = AcceptanceFunction::step(0.05);
    CHECK(f(0.049) == 1.0);
    CHECK(f(0.05) == 0.0);   // boundary excluded
    CHECK(f(0.051) == 0.0);
    CHECK(f.mean() == doctest::Approx(0.05).epsilon(1e-12));
    // the acceptance coin is irrelevant for the step rule
    CHECK(accept(f, 0.01, 0.999));
    CHECK_FALSE(accept(f, 0.07, 0.0));
}

TEST_CASE("constant acceptance ignores the cost") {
    const auto f = AcceptanceFunction::constant(0.3);
    CHECK(f(0.0) == 0.3);
    CHECK(f(1.0) == 0.3);
    CHECK(f.mean() == 0.3);
    CHECK_THROWS_AS(AcceptanceFunction::constant(1.01), std::invalid_argument);
}

TEST_CASE("market parameter validation") {
    CHECK_NOTHROW(MarketParams(500, 2000, 0.05, 5.0));
    CHECK_THROWS_AS(MarketParams(0, 2000, 0.05, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(MarketParams(500, 0, 0.05, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(MarketParams(500, 2000, 0.0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(MarketParams(500, 2000, 0.5, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(MarketParams(500, 2000, 0.05, -1.0), std::invalid_argument);
}

TEST_CASE("cost sampling: ranges, strict variant order, determinism") {
    const MarketParams params(40, 60, 0.05, 1.0);
    const CostMatrix cm = sample_uncorrelated(params, 7);
    REQUIRE(cm.x.size() == 40u * 60u);
    REQUIRE(cm.y.size() == 60u);
    for (const double v : cm.x) {
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
    for (std::size_t a = 1; a < cm.y.size(); ++a) CHECK(cm.y[a] > cm.y[a - 1]);

    const CostMatrix again = sample_uncorrelated(params, 7);
    CHECK(again.x == cm.x);
    CHECK(again.y == cm.y);
    const CostMatrix other = sample_uncorrelated(params, 8);
    CHECK(other.x != cm.x);
}

TEST_CASE("sorted costs have the uniform order-statistic means") {
    const int N = 2000;
    const int reps = 1000;
    std::vector<double> sum(static_cast<std::size_t>(N), 0.0);
    for (int r = 0; r < reps; ++r) {
        Rng rng(derive_seed(99, static_cast<std::uint64_t>(r)));
        const std::vector<double> y = sample_sorted_costs(N, rng);
        for (int a = 0; a < N; ++a) sum[static_cast<std::size_t>(a)] += y[static_cast<std::size_t>(a)];
    }
    for (const int alpha : {1, 5, 100, 1000, 2000}) {
        const double mean = sum[static_cast<std::size_t>(alpha - 1)] / reps;
        const double expect = static_cast<double>(alpha) / (N + 1.0);
        // var of the alpha-th order statistic is a(N+1-a)/((N+1)^2(N+2))
        const double sd = std::sqrt(alpha * (N + 1.0 - alpha) /
                                    ((N + 1.0) * (N + 1.0) * (N + 2.0)));
        CHECK(std::abs(mean - expect) <= 4.0 * sd / std::sqrt(static_cast<double>(reps)));
    }
}

TEST_CASE("profit arithmetic and size checks") {
    const std::vector<long> counts{10, 0, 5};
    const std::vector<double> y{0.1, 0.2, 0.4, 0.9};
    CHECK(profit(counts, y, 3, 2.0) ==
          doctest::Approx(10 * 0.9 + 0 * 0.8 + 5 * 0.6 - 3 * 2.0).epsilon(1e-12));
    CHECK(profit(std::vector<long>{}, y, 0, 2.0) == 0.0);
    CHECK_THROWS_AS(profit(counts, y, 2, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(profit(counts, std::vector<double>{0.1}, 3, 2.0), std::invalid_argument);
}

TEST_CASE("uniform generator moments") {
    Rng rng(12345);
    const int n = 200000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.u01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
        sq += u * u;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    CHECK(std::abs(mean - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / n));
    CHECK(var == doctest::Approx(1.0 / 12.0).epsilon(0.02));
}

TEST_CASE("normal generator moments") {
    Rng rng(777);
    const int n = 200000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        sum += z;
        sq += z * z;
    }
    CHECK(std::abs(sum / n) < 4.0 / std::sqrt(static_cast<double>(n)));
    CHECK(sq / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("binomial sampler matches mean and variance") {
    Rng rng(4242);
    const long m = 100;
    const double p = 0.3;
    const int n = 50000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const long v = rng.binomial(m, p);
        CHECK(v >= 0);
        CHECK(v <= m);
        sum += static_cast<double>(v);
        sq += static_cast<double>(v) * static_cast<double>(v);
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    const double true_var = m * p * (1.0 - p);
    CHECK(std::abs(mean - m * p) < 4.0 * std::sqrt(true_var / n));
    CHECK(var == doctest::Approx(true_var).epsilon(0.05));
    CHECK(rng.binomial(0, 0.3) == 0);
    CHECK(rng.binomial(50, 0.0) == 0);
    CHECK(rng.binomial(50, 1.0) == 50);
}

TEST_CASE("derived seeds differ and reproduce") {
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(9, 5) == derive_seed(9, 5));
    Rng a(derive_seed(1, 3)), b(derive_seed(1, 3));
    for (int i = 0; i < 100; ++i) CHECK(a.u01() == b.u01());
}
