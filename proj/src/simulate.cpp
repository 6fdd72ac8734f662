#include "hetmarket/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hetmarket/numeric.hpp"
#include "hetmarket/parallel.hpp"
#include "hetmarket/rng.hpp"

namespace hetmarket {

const Stat& RunSummary::scalar(std::string_view name) const {
    for (const auto& [n, s] : scalars)
        if (n == name) return s;
    throw std::out_of_range("RunSummary: no scalar named " + std::string(name));
}

const std::vector<Stat>& RunSummary::series_of(std::string_view name) const {
    for (const auto& [n, s] : series)
        if (n == name) return s;
    throw std::out_of_range("RunSummary: no series named " + std::string(name));
}

namespace {

// Runs R realizations, each filling `width` doubles of its own row; row r is
// always produced from seed derive_seed(seed, r), so the table is
// independent of the thread count.
std::vector<double> collect(std::size_t R, std::size_t width, std::uint64_t seed,
                            const std::function<void(std::size_t, Rng&, double*)>& fill) {
    std::vector<double> data(R * width);
    parallel_for(R, [&](std::size_t r) {
        Rng rng(derive_seed(seed, r));
        fill(r, rng, data.data() + r * width);
    });
    return data;
}

Stat column_stat(const std::vector<double>& data, std::size_t R, std::size_t width,
                 std::size_t col) {
    double sum = 0.0;
    for (std::size_t r = 0; r < R; ++r) sum += data[r * width + col];
    const double mean = sum / static_cast<double>(R);
    if (R < 2) return {mean, 0.0};
    double ss = 0.0;
    for (std::size_t r = 0; r < R; ++r) {
        const double d = data[r * width + col] - mean;
        ss += d * d;
    }
    const double sd = std::sqrt(ss / static_cast<double>(R - 1));
    return {mean, sd / std::sqrt(static_cast<double>(R))};
}

std::vector<Stat> column_stats(const std::vector<double>& data, std::size_t R,
                               std::size_t width, std::size_t first, std::size_t count) {
    std::vector<Stat> out(count);
    for (std::size_t c = 0; c < count; ++c) out[c] = column_stat(data, R, width, first + c);
    return out;
}

void require_run(int R) {
    if (R < 1) throw std::invalid_argument("simulation: R must be at least 1");
}

// One buyer's pass over `k` offered variants: draws acceptance for each and
// keeps a uniformly chosen accepted variant via reservoir replacement.
// Returns the picked 0-based variant or -1.
template <class AcceptFn>
int pick_variant(Rng& rng, int k, AcceptFn&& accepts) {
    int count = 0;
    int pick = -1;
    for (int a = 0; a < k; ++a) {
        if (accepts(a)) {
            ++count;
            if (count == 1 || rng.u01() < 1.0 / static_cast<double>(count)) pick = a;
        }
    }
    return pick;
}

bool draw_accept(Rng& rng, const AcceptanceFunction& f) {
    const double x = rng.u01();
    if (f.kind == AcceptanceFunction::Kind::step) return x < f.param;
    return rng.u01() < f(x);
}

} // namespace

RunSummary sim_uninformed(const MarketParams& params, int k, int R, std::uint64_t seed) {
    require_run(R);
    if (k < 0 || k > params.N) throw std::invalid_argument("sim_uninformed: k out of range");
    const std::size_t width = static_cast<std::size_t>(k) + 1;
    const auto data = collect(
        static_cast<std::size_t>(R), width, seed, [&](std::size_t, Rng& rng, double* row) {
            const std::vector<double> y = sample_sorted_costs(params.N, rng);
            std::vector<long> counts(static_cast<std::size_t>(k), 0);
            for (int i = 0; i < params.M; ++i) {
                const int pick = pick_variant(rng, k, [&](int) { return draw_accept(rng, params.acceptance); });
                if (pick >= 0) ++counts[static_cast<std::size_t>(pick)];
            }
            for (int a = 0; a < k; ++a) row[a] = static_cast<double>(counts[static_cast<std::size_t>(a)]);
            row[k] = profit(counts, y, k, params.Z);
        });
    RunSummary out{"uninformed", seed, static_cast<std::size_t>(R), {}, {}};
    out.scalars.emplace_back("profit", column_stat(data, static_cast<std::size_t>(R), width, width - 1));
    out.series.emplace_back("sales", column_stats(data, static_cast<std::size_t>(R), width, 0,
                                                  static_cast<std::size_t>(k)));
    return out;
}

RunSummary sim_uninformed_scan(const MarketParams& params, int k_max, int R, std::uint64_t seed) {
    require_run(R);
    if (k_max < 0 || k_max > params.N) throw std::invalid_argument("sim_uninformed_scan: k_max out of range");
    const std::size_t width = static_cast<std::size_t>(k_max) + 1;
    const auto data = collect(
        static_cast<std::size_t>(R), width, seed, [&](std::size_t, Rng& rng, double* row) {
            const std::vector<double> y = sample_sorted_costs(params.N, rng);
            std::vector<int> count(static_cast<std::size_t>(params.M), 0);
            std::vector<double> pick_value(static_cast<std::size_t>(params.M), 0.0);
            double total = 0.0;
            row[0] = 0.0;
            for (int a = 0; a < k_max; ++a) {
                const double value = MarketParams::price - y[static_cast<std::size_t>(a)];
                for (int i = 0; i < params.M; ++i) {
                    if (!draw_accept(rng, params.acceptance)) continue;
                    auto& c = count[static_cast<std::size_t>(i)];
                    auto& pv = pick_value[static_cast<std::size_t>(i)];
                    ++c;
                    if (c == 1) {
                        pv = value;
                        total += value;
                    } else if (rng.u01() < 1.0 / static_cast<double>(c)) {
                        total += value - pv;
                        pv = value;
                    }
                }
                row[a + 1] = total;
            }
        });
    RunSummary out{"uninformed_scan", seed, static_cast<std::size_t>(R), {}, {}};
    out.series.emplace_back("revenue", column_stats(data, static_cast<std::size_t>(R), width, 0, width));
    return out;
}

RunSummary sim_sequential(const MarketParams& params, Stopping stopping, int R, std::uint64_t seed) {
    require_run(R);
    const double pi_accept = params.acceptance.mean();
    RunSummary out{"sequential", seed, static_cast<std::size_t>(R), {}, {}};
    if (const FixedK* fixed = std::get_if<FixedK>(&stopping)) {
        const int k = fixed->k;
        if (k < 0 || k > params.N) throw std::invalid_argument("sim_sequential: k out of range");
        const std::size_t width = static_cast<std::size_t>(k) + 1;
        const auto data = collect(
            static_cast<std::size_t>(R), width, seed, [&](std::size_t, Rng& rng, double* row) {
                const std::vector<double> y = sample_sorted_costs(params.N, rng);
                long remaining = params.M;
                std::vector<long> counts(static_cast<std::size_t>(k), 0);
                for (int a = 0; a < k; ++a) {
                    const long n = rng.binomial(remaining, pi_accept);
                    remaining -= n;
                    counts[static_cast<std::size_t>(a)] = n;
                    row[a] = static_cast<double>(n);
                }
                row[k] = profit(counts, y, k, params.Z);
            });
        out.scalars.emplace_back("profit", column_stat(data, static_cast<std::size_t>(R), width, width - 1));
        out.series.emplace_back("sales", column_stats(data, static_cast<std::size_t>(R), width, 0,
                                                      static_cast<std::size_t>(k)));
        return out;
    }
    const std::size_t width = 2;
    const auto data = collect(
        static_cast<std::size_t>(R), width, seed, [&](std::size_t, Rng& rng, double* row) {
            const std::vector<double> y = sample_sorted_costs(params.N, rng);
            long remaining = params.M;
            double total = 0.0;
            int passed = 0;
            for (int a = 0; a < params.N; ++a) {
                const long n = rng.binomial(remaining, pi_accept);
                remaining -= n;
                const double margin = static_cast<double>(n) *
                                      (MarketParams::price - y[static_cast<std::size_t>(a)]);
                total += margin - params.Z;
                if (margin < params.Z) break;   // first unprofitable variant: produced, then stop
                passed = a + 1;
            }
            row[0] = static_cast<double>(passed);
            row[1] = total;
        });
    out.scalars.emplace_back("stop_k", column_stat(data, static_cast<std::size_t>(R), width, 0));
    out.scalars.emplace_back("profit", column_stat(data, static_cast<std::size_t>(R), width, 1));
    return out;
}

RunSummary sim_duopoly(const MarketParams& params, double Z1, double Z2,
                       int k1, int k2, int R, std::uint64_t seed) {
    require_run(R);
    if (k1 < 0 || k2 < 0 || k1 + k2 > params.N)
        throw std::invalid_argument("sim_duopoly: need k1, k2 >= 0 and k1 + k2 <= N");
    const int K = k1 + k2;
    const std::size_t width = 4;
    const auto data = collect(
        static_cast<std::size_t>(R), width, seed, [&](std::size_t, Rng& rng, double* row) {
            const std::vector<double> y = sample_sorted_costs(params.N, rng);
            std::vector<long> counts(static_cast<std::size_t>(K), 0);
            for (int i = 0; i < params.M; ++i) {
                const int pick = pick_variant(rng, K, [&](int) { return draw_accept(rng, params.acceptance); });
                if (pick >= 0) ++counts[static_cast<std::size_t>(pick)];
            }
            double rev1 = 0.0, rev2 = 0.0;
            long sales1 = 0, sales2 = 0;
            for (int a = 0; a < K; ++a) {
                const double value = static_cast<double>(counts[static_cast<std::size_t>(a)]) *
                                     (MarketParams::price - y[static_cast<std::size_t>(a)]);
                if (a < k1) {
                    rev1 += value;
                    sales1 += counts[static_cast<std::size_t>(a)];
                } else {
                    rev2 += value;
                    sales2 += counts[static_cast<std::size_t>(a)];
                }
            }
            row[0] = rev1 - static_cast<double>(k1) * Z1;
            row[1] = rev2 - static_cast<double>(k2) * Z2;
            row[2] = static_cast<double>(sales1);
            row[3] = static_cast<double>(sales2);
        });
    RunSummary out{"duopoly", seed, static_cast<std::size_t>(R), {}, {}};
    out.scalars.emplace_back("X1", column_stat(data, static_cast<std::size_t>(R), width, 0));
    out.scalars.emplace_back("X2", column_stat(data, static_cast<std::size_t>(R), width, 1));
    out.scalars.emplace_back("sales1", column_stat(data, static_cast<std::size_t>(R), width, 2));
    out.scalars.emplace_back("sales2", column_stat(data, static_cast<std::size_t>(R), width, 3));
    return out;
}

RunSummary sim_informed_max(const MarketParams& params, int R, std::uint64_t seed) {
    require_run(R);
    const double pi_accept = params.acceptance.mean();
    const auto data = collect(
        static_cast<std::size_t>(R), 1, seed, [&](std::size_t, Rng& rng, double* row) {
            long best = 0;
            for (int a = 0; a < params.N; ++a)
                best = std::max(best, rng.binomial(params.M, pi_accept));
            row[0] = static_cast<double>(best);
        });
    const Stat m = column_stat(data, static_cast<std::size_t>(R), 1, 0);
    long max_m = 0;
    for (const double v : data) max_m = std::max(max_m, static_cast<long>(v));
    std::vector<long> hist(static_cast<std::size_t>(max_m) + 1, 0);
    for (const double v : data) ++hist[static_cast<std::size_t>(v)];
    std::size_t mode = 0;
    for (std::size_t i = 1; i < hist.size(); ++i)
        if (hist[i] > hist[mode]) mode = i;
    const double Mp = static_cast<double>(params.M) * params.p;

    RunSummary out{"informed_max", seed, static_cast<std::size_t>(R), {}, {}};
    out.scalars.emplace_back("m_mean", m);
    out.scalars.emplace_back("m_mode", Stat{static_cast<double>(mode), 0.0});
    out.scalars.emplace_back("delta_hat", Stat{(m.mean - Mp) / Mp, m.se / Mp});
    std::vector<Stat> pmf(hist.size());
    for (std::size_t i = 0; i < hist.size(); ++i) {
        const double f = static_cast<double>(hist[i]) / static_cast<double>(R);
        pmf[i] = {f, std::sqrt(f * (1.0 - f) / static_cast<double>(R))};
    }
    out.series.emplace_back("m_pmf", std::move(pmf));
    return out;
}

namespace {

// Correlated-market per-realization generator state: offered variant costs
// (ascending) plus whatever the buyer draws need.  Offered columns are the
// vendor's k cheapest variants.
struct CorrelatedOffers {
    std::vector<double> y;        // offered costs, ascending, length k
    std::vector<double> shared;   // per-offered-variant shared component for buyer draws
};

CorrelatedOffers correlated_offers(const MarketParams& params, Scheme scheme, double t,
                                   double s, int k, Rng& rng) {
    const int N = params.N;
    CorrelatedOffers offers;
    switch (scheme) {
        case Scheme::B: {
            offers.y.resize(static_cast<std::size_t>(k));
            offers.shared.resize(static_cast<std::size_t>(k));
            for (int a = 0; a < k; ++a) {
                const double ybar = static_cast<double>(a) / static_cast<double>(N - 1);
                offers.y[static_cast<std::size_t>(a)] = ybar;
                offers.shared[static_cast<std::size_t>(a)] = 0.5 + s * t * (ybar - 0.5);
            }
            return offers;
        }
        case Scheme::A: {
            std::vector<double> c(static_cast<std::size_t>(N));
            for (double& v : c) v = rng.u01();
            std::vector<double> y(static_cast<std::size_t>(N));
            for (int a = 0; a < N; ++a) {
                const double cc = s > 0 ? c[static_cast<std::size_t>(a)]
                                        : 1.0 - c[static_cast<std::size_t>(a)];
                y[static_cast<std::size_t>(a)] = (1.0 - t) * rng.u01() + t * cc;
            }
            std::vector<int> order(static_cast<std::size_t>(N));
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return y[static_cast<std::size_t>(a)] < y[static_cast<std::size_t>(b)];
            });
            offers.y.resize(static_cast<std::size_t>(k));
            offers.shared.resize(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j) {
                offers.y[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
                offers.shared[static_cast<std::size_t>(j)] = t * c[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
            }
            return offers;
        }
        case Scheme::C: {
            const double wc = std::sqrt(t);
            const double wn = std::sqrt(1.0 - t);
            std::vector<double> c(static_cast<std::size_t>(N));
            for (double& v : c) v = rng.normal();
            std::vector<double> y(static_cast<std::size_t>(N));
            for (int a = 0; a < N; ++a)
                y[static_cast<std::size_t>(a)] =
                    normal_cdf(wn * rng.normal() + s * wc * c[static_cast<std::size_t>(a)]);
            std::vector<int> order(static_cast<std::size_t>(N));
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return y[static_cast<std::size_t>(a)] < y[static_cast<std::size_t>(b)];
            });
            offers.y.resize(static_cast<std::size_t>(k));
            offers.shared.resize(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j) {
                offers.y[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
                offers.shared[static_cast<std::size_t>(j)] = wc * c[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
            }
            return offers;
        }
    }
    throw std::invalid_argument("correlated_offers: unknown scheme");
}

// Buyer fit cost for offered column j given the shared component.
double correlated_buyer_cost(Scheme scheme, double t, double shared, Rng& rng) {
    switch (scheme) {
        case Scheme::B:
            return shared + (1.0 - t) * (rng.u01() - 0.5);
        case Scheme::A:
            return (1.0 - t) * rng.u01() + shared;
        case Scheme::C:
            return normal_cdf(std::sqrt(1.0 - t) * rng.normal() + shared);
    }
    throw std::invalid_argument("correlated_buyer_cost: unknown scheme");
}

} // namespace

RunSummary sim_correlated(const MarketParams& params, Scheme scheme, double t, double s,
                          int k, int R, std::uint64_t seed) {
    require_run(R);
    if (k < 0 || k > params.N) throw std::invalid_argument("sim_correlated: k out of range");
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("sim_correlated: t must be in [0,1]");
    if (s != 1.0 && s != -1.0) throw std::invalid_argument("sim_correlated: s must be +1 or -1");
    const std::size_t width = static_cast<std::size_t>(k) + 2;
    const auto data = collect(
        static_cast<std::size_t>(R), width, seed, [&](std::size_t, Rng& rng, double* row) {
            const CorrelatedOffers offers = correlated_offers(params, scheme, t, s, k, rng);
            std::vector<long> counts(static_cast<std::size_t>(k), 0);
            long bought = 0;
            for (int i = 0; i < params.M; ++i) {
                const int pick = pick_variant(rng, k, [&](int a) {
                    const double x = correlated_buyer_cost(scheme, t, offers.shared[static_cast<std::size_t>(a)], rng);
                    return x < params.p;   // step acceptance
                });
                if (pick >= 0) {
                    ++counts[static_cast<std::size_t>(pick)];
                    ++bought;
                }
            }
            for (int a = 0; a < k; ++a) row[a] = static_cast<double>(counts[static_cast<std::size_t>(a)]);
            row[k] = profit(counts, offers.y, k, params.Z);
            row[k + 1] = static_cast<double>(bought) / static_cast<double>(params.M);
        });
    RunSummary out{"correlated", seed, static_cast<std::size_t>(R), {}, {}};
    out.scalars.emplace_back("profit", column_stat(data, static_cast<std::size_t>(R), width, static_cast<std::size_t>(k)));
    out.scalars.emplace_back("coverage", column_stat(data, static_cast<std::size_t>(R), width, static_cast<std::size_t>(k) + 1));
    out.series.emplace_back("sales", column_stats(data, static_cast<std::size_t>(R), width, 0,
                                                  static_cast<std::size_t>(k)));
    return out;
}

RunSummary sim_correlated_scan(const MarketParams& params, Scheme scheme, double t, double s,
                               int k_max, int R, std::uint64_t seed) {
    require_run(R);
    if (k_max < 0 || k_max > params.N) throw std::invalid_argument("sim_correlated_scan: k_max out of range");
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("sim_correlated_scan: t must be in [0,1]");
    if (s != 1.0 && s != -1.0) throw std::invalid_argument("sim_correlated_scan: s must be +1 or -1");
    const std::size_t width = static_cast<std::size_t>(k_max) + 1;
    const auto data = collect(
        static_cast<std::size_t>(R), width, seed, [&](std::size_t, Rng& rng, double* row) {
            const CorrelatedOffers offers = correlated_offers(params, scheme, t, s, k_max, rng);
            std::vector<int> count(static_cast<std::size_t>(params.M), 0);
            std::vector<double> pick_value(static_cast<std::size_t>(params.M), 0.0);
            double total = 0.0;
            row[0] = 0.0;
            for (int a = 0; a < k_max; ++a) {
                const double value = MarketParams::price - offers.y[static_cast<std::size_t>(a)];
                for (int i = 0; i < params.M; ++i) {
                    const double x = correlated_buyer_cost(scheme, t, offers.shared[static_cast<std::size_t>(a)], rng);
                    if (!(x < params.p)) continue;
                    auto& c = count[static_cast<std::size_t>(i)];
                    auto& pv = pick_value[static_cast<std::size_t>(i)];
                    ++c;
                    if (c == 1) {
                        pv = value;
                        total += value;
                    } else if (rng.u01() < 1.0 / static_cast<double>(c)) {
                        total += value - pv;
                        pv = value;
                    }
                }
                row[a + 1] = total;
            }
        });
    RunSummary out{"correlated_scan", seed, static_cast<std::size_t>(R), {}, {}};
    out.series.emplace_back("revenue", column_stats(data, static_cast<std::size_t>(R), width, 0, width));
    return out;
}

RunSummary sim_matching(int N, int M, int d, int R, std::uint64_t seed) {
    require_run(R);
    if (N < 1 || M < 1 || d < 1 || d > N)
        throw std::invalid_argument("sim_matching: need 1 <= d <= N and M >= 1");
    const std::size_t width = 4;
    const auto data = collect(
        static_cast<std::size_t>(R), width, seed, [&](std::size_t, Rng& rng, double* row) {
            std::vector<double> y(static_cast<std::size_t>(N));
            for (double& v : y) v = rng.u01();
            std::vector<int> order(static_cast<std::size_t>(N));
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return y[static_cast<std::size_t>(a)] < y[static_cast<std::size_t>(b)];
            });
            std::vector<double> x(static_cast<std::size_t>(M) * static_cast<std::size_t>(N));
            for (double& v : x) v = rng.u01();
            auto xat = [&](int i, int a) {
                return x[static_cast<std::size_t>(i) * static_cast<std::size_t>(N) + static_cast<std::size_t>(a)];
            };
            // b_j: worst (largest) buyer rank of offered variant j
            std::vector<int> worst(static_cast<std::size_t>(d), 0);
            for (int j = 0; j < d; ++j) {
                const int variant = order[static_cast<std::size_t>(j)];
                for (int i = 0; i < M; ++i) {
                    int rank = 1;
                    const double xv = xat(i, variant);
                    for (int a = 0; a < N; ++a)
                        if (xat(i, a) < xv) ++rank;
                    worst[static_cast<std::size_t>(j)] = std::max(worst[static_cast<std::size_t>(j)], rank);
                }
            }
            int best = worst[0];
            for (int j = 1; j < d; ++j) best = std::min(best, worst[static_cast<std::size_t>(j)]);
            // winner: uniform among offered variants attaining the best worst-rank
            int ties = 0;
            int win = 0;
            for (int j = 0; j < d; ++j) {
                if (worst[static_cast<std::size_t>(j)] != best) continue;
                ++ties;
                if (ties == 1 || rng.u01() < 1.0 / static_cast<double>(ties)) win = j;
            }
            const int variant = order[static_cast<std::size_t>(win)];
            double mean_x = 0.0;
            for (int i = 0; i < M; ++i) mean_x += xat(i, variant);
            row[0] = static_cast<double>(best);
            row[1] = static_cast<double>(win + 1);
            row[2] = mean_x / static_cast<double>(M);
            row[3] = y[static_cast<std::size_t>(variant)];
        });
    RunSummary out{"matching", seed, static_cast<std::size_t>(R), {}, {}};
    out.scalars.emplace_back("b", column_stat(data, static_cast<std::size_t>(R), width, 0));
    out.scalars.emplace_back("vendor_rank", column_stat(data, static_cast<std::size_t>(R), width, 1));
    out.scalars.emplace_back("x", column_stat(data, static_cast<std::size_t>(R), width, 2));
    out.scalars.emplace_back("y", column_stat(data, static_cast<std::size_t>(R), width, 3));
    return out;
}

RunSummary sim_multi_variant(int N, int d, int R, std::uint64_t seed, int buyers) {
    require_run(R);
    if (N < 1 || d < 1 || d > N || buyers < 1)
        throw std::invalid_argument("sim_multi_variant: need 1 <= d <= N and buyers >= 1");
    const std::size_t B = static_cast<std::size_t>(buyers);
    const std::size_t width = 2 * B;
    const auto data = collect(
        static_cast<std::size_t>(R), width, seed, [&](std::size_t, Rng& rng, double* row) {
            std::vector<double> y(static_cast<std::size_t>(N));
            for (double& v : y) v = rng.u01();
            std::vector<int> order(static_cast<std::size_t>(N));
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return y[static_cast<std::size_t>(a)] < y[static_cast<std::size_t>(b)];
            });
            std::vector<double> x(static_cast<std::size_t>(N));
            for (std::size_t q = 0; q < B; ++q) {
                for (double& v : x) v = rng.u01();
                double best = 2.0;
                for (int j = 0; j < d; ++j)
                    best = std::min(best, x[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])]);
                int rank = 1;
                for (int a = 0; a < N; ++a)
                    if (x[static_cast<std::size_t>(a)] < best) ++rank;
                row[q] = static_cast<double>(rank);
                row[B + q] = best;
            }
        });
    const std::size_t R_sz = static_cast<std::size_t>(R);
    // per-realization means are the independent samples for the scalar stats
    std::vector<double> mean_b(R_sz), mean_x(R_sz);
    for (std::size_t r = 0; r < R_sz; ++r) {
        double sb = 0.0, sx = 0.0;
        for (std::size_t q = 0; q < B; ++q) {
            sb += data[r * width + q];
            sx += data[r * width + B + q];
        }
        mean_b[r] = sb / static_cast<double>(B);
        mean_x[r] = sx / static_cast<double>(B);
    }
    const MeanSE mb = mean_se(mean_b);
    const MeanSE mx = mean_se(mean_x);
    std::vector<long> hist(static_cast<std::size_t>(N) + 1, 0);
    for (std::size_t r = 0; r < R_sz; ++r)
        for (std::size_t q = 0; q < B; ++q)
            ++hist[static_cast<std::size_t>(data[r * width + q])];
    std::size_t top = hist.size();
    while (top > 1 && hist[top - 1] == 0) --top;
    const double samples = static_cast<double>(R_sz * B);
    std::vector<Stat> pmf(top - 1);
    for (std::size_t b = 1; b < top; ++b) {
        const double f = static_cast<double>(hist[b]) / samples;
        pmf[b - 1] = {f, std::sqrt(f * (1.0 - f) / samples)};
    }
    RunSummary out{"multi_variant", seed, R_sz, {}, {}};
    out.scalars.emplace_back("b", Stat{mb.mean, mb.se});
    out.scalars.emplace_back("x", Stat{mx.mean, mx.se});
    out.series.emplace_back("b_pmf", std::move(pmf));
    return out;
}

} // namespace hetmarket
