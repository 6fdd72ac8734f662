#include "hetmarket/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "hetmarket/analytic.hpp"
#include "hetmarket/correlation.hpp"
#include "hetmarket/experiments.hpp"
#include "hetmarket/numeric.hpp"
#include "hetmarket/rng.hpp"
#include "hetmarket/simulate.hpp"
#include "hetmarket/solve.hpp"

namespace hetmarket::checks {

namespace {

// Accumulates per-leg verdicts; every tolerance is multiplied by
// opt.tolerance_scale, and a non-positive scale fails every leg outright
// (a zero tolerance is unsatisfiable as a policy, so nothing may pass).
class Legs {
public:
    Legs(std::string name, const CheckOptions& opt) : scale_(opt.tolerance_scale) {
        res_.name = std::move(name);
    }

    void abs(const std::string& label, double measured, double target, double tol) {
        const double gap = std::abs(measured - target);
        record(label, gap <= scale_ * tol,
               "measured " + format_g9(measured) + ", target " + format_g9(target) +
                   ", |diff| " + format_g9(gap) + " vs tol " + format_g9(scale_ * tol));
    }

    void rel(const std::string& label, double measured, double target, double rel_tol) {
        const double gap = std::abs(measured - target);
        const double tol = scale_ * rel_tol * std::abs(target);
        record(label, gap <= tol,
               "measured " + format_g9(measured) + ", target " + format_g9(target) +
                   ", |diff| " + format_g9(gap) + " vs tol " + format_g9(tol) + " (" +
                   format_g9(rel_tol * 100.0) + "% rel)");
    }

    void exact(const std::string& label, double measured, double target) {
        record(label, measured == target && scale_ > 0.0,
               "measured " + format_g9(measured) + ", target " + format_g9(target) + " (exact)");
    }

    void holds(const std::string& label, bool ok, const std::string& detail) {
        record(label, ok, detail);
    }

    void warn(const std::string& message) {
        res_.warned = true;
        res_.lines.push_back("WARN " + message);
    }

    CheckResult finish() && { return std::move(res_); }

private:
    void record(const std::string& label, bool ok, const std::string& detail) {
        if (scale_ <= 0.0) ok = false;
        res_.passed = res_.passed && ok;
        res_.lines.push_back(std::string(ok ? "PASS " : "FAIL ") + label + ": " + detail +
                             (scale_ <= 0.0 ? " [tolerance scale <= 0 disables all tolerances]" : ""));
    }

    CheckResult res_;
    double scale_;
};

int pick_R(Legs& legs, const CheckOptions& opt, int def) {
    if (opt.R_override <= 0) return def;
    if (opt.R_override < std::min(def, 100))
        legs.warn("R = " + std::to_string(opt.R_override) +
                  " is underpowered for this criterion (default " + std::to_string(def) + ")");
    return opt.R_override;
}

} // namespace

CheckResult check_uninformed_optimum(const CheckOptions& opt) {
    Legs legs("uninformed", opt);
    const MarketParams base(500, 2000, 0.05, 0.0);
    const int R = pick_R(legs, opt, 1000);
    const int k_scan = 110;
    const RunSummary scan = sim_uninformed_scan(base, k_scan, R, opt.seed);
    const auto& revenue = scan.series_of("revenue");
    for (const double Z : {1.0, 2.0, 5.0, 10.0, 15.0, 20.0}) {
        MarketParams params = base;
        params.Z = Z;
        const KoptResult kr = kopt_uninformed(params);
        int k_star = 0;
        double best = 0.0;
        for (int k = 0; k <= k_scan; ++k) {
            const double v = revenue[static_cast<std::size_t>(k)].mean - k * Z;
            if (v > best) {
                best = v;
                k_star = k;
            }
        }
        legs.abs("Z=" + format_g9(Z) + " optimum shelf size", k_star, kr.k_opt, 2.0);
        legs.rel("Z=" + format_g9(Z) + " optimum profit", best, kr.x_opt, 0.05);
    }
    return std::move(legs).finish();
}

CheckResult check_idle_threshold(const CheckOptions& opt) {
    Legs legs("idle", opt);
    const MarketParams params(500, 2000, 0.05, 30.0);   // Z = 30 > Mp = 25
    const KoptResult kr = kopt_uninformed(params);
    legs.holds("analytic idle flag", kr.idle && kr.k_opt == 0.0 && kr.x_opt == 0.0,
               "k_opt = " + format_g9(kr.k_opt) + ", X_opt = " + format_g9(kr.x_opt));
    const int R = pick_R(legs, opt, 500);
    const RunSummary scan = sim_uninformed_scan(params, 10, R, opt.seed);
    const auto& revenue = scan.series_of("revenue");
    int k_star = 0;
    double best = 0.0;
    for (int k = 0; k <= 10; ++k) {
        const double v = revenue[static_cast<std::size_t>(k)].mean - k * params.Z;
        if (v > best) {
            best = v;
            k_star = k;
        }
    }
    legs.exact("simulated optimum shelf size", k_star, 0.0);
    legs.exact("simulated optimum profit", best, 0.0);
    return std::move(legs).finish();
}

CheckResult check_sequential(const CheckOptions& opt) {
    Legs legs("sequential", opt);
    {
        const MarketParams params(500, 2000, 0.05, 5.0);
        const int R = pick_R(legs, opt, 1000);
        const RunSummary run = sim_sequential(params, FixedK{30}, R, opt.seed);
        const auto& sales = run.series_of("sales");
        double worst = 0.0;
        int worst_alpha = 1;
        for (int a = 1; a <= 30; ++a) {
            const Stat& st = sales[static_cast<std::size_t>(a - 1)];
            const double target = sequential_sales(params.M, params.p, a);
            const double z = st.se > 0.0 ? std::abs(st.mean - target) / st.se
                                         : (st.mean == target ? 0.0 : 1e30);
            if (z > worst) {
                worst = z;
                worst_alpha = a;
            }
        }
        legs.abs("per-rank sales within 4 SE (worst rank " + std::to_string(worst_alpha) + ")",
                 worst, 0.0, 4.0);
    }
    {
        const int M = 100000;
        const MarketParams params(M, 2000, 0.05, 0.01 * M);
        const int R = pick_R(legs, opt, 1000);
        const RunSummary run = sim_sequential(params, GreedyRule{}, R, opt.seed);
        legs.abs("greedy mean stopping k", run.scalar("stop_k").mean,
                 kopt_sequential(M, params.p, params.Z), 2.0);
    }
    return std::move(legs).finish();
}

CheckResult check_duopoly(const CheckOptions& opt) {
    Legs legs("duopoly", opt);
    const int M = 500;
    const double p = 0.05;
    const double Z2 = 5.0;
    const double priceout = duopoly_priceout(M, p, Z2);
    legs.abs("price-out closed form", priceout, 12.426698691192238, 1e-9);

    double last_active = 0.0;
    double first_idle = 0.0;
    for (int z1 = 1; z1 <= 20; ++z1) {
        const EquilibriumResult eq = duopoly_equilibrium(M, p, z1, Z2, 2000);
        if (eq.k1 >= 1) last_active = z1;
        else if (first_idle == 0.0) first_idle = z1;
    }
    legs.holds("vendor-1 exit happens",
               last_active > 0.0 && first_idle > last_active,
               "active through Z1 = " + format_g9(last_active) + ", idle from Z1 = " +
                   format_g9(first_idle));
    if (last_active > 0.0 && first_idle > last_active) {
        const double mid = 0.5 * (last_active + first_idle);
        legs.abs("exit bracket centered on price-out", mid, priceout, 1.0);
    }

    // fixed point is a mutual best response (full rescans in both coordinates)
    const EquilibriumResult eq = duopoly_equilibrium(M, p, 10.0, Z2, 2000);
    const int br1 =
        argmax_k([&](int k) { return duopoly_profits(M, p, k, eq.k2, 10.0, Z2).first; }, 2000).k;
    const int br2 =
        argmax_k([&](int k) { return duopoly_profits(M, p, eq.k1, k, 10.0, Z2).second; }, 2000).k;
    legs.holds("equilibrium is a mutual best response",
               eq.converged && br1 == eq.k1 && br2 == eq.k2,
               "(k1,k2) = (" + std::to_string(eq.k1) + "," + std::to_string(eq.k2) +
                   "), rescans (" + std::to_string(br1) + "," + std::to_string(br2) + ")");
    return std::move(legs).finish();
}

CheckResult check_informed(const CheckOptions& opt) {
    Legs legs("informed", opt);
    {
        const MarketParams params(500, 2000, 0.05, 1.0);
        const int R = pick_R(legs, opt, 2000);
        const RunSummary run = sim_informed_max(params, R, opt.seed);
        legs.rel("relative best-seller gain", run.scalar("delta_hat").mean,
                 informed_gain(params.M, params.p, params.N), 0.10);
    }
    {
        const MarketParams params(500, 100, 0.05, 1.0);
        const int R = pick_R(legs, opt, 10000);
        const RunSummary run = sim_informed_max(params, R, opt.seed);
        const auto& pmf = run.series_of("m_pmf");
        const double Mp = params.M * params.p;
        const double sigma = std::sqrt(Mp * (1.0 - params.p));
        auto cdf = [&](double a) {
            return std::pow(normal_cdf((a - Mp) / sigma), params.N);
        };
        const int wlo = std::max(0, static_cast<int>(std::floor(Mp - 2.0 * sigma)));
        const int whi = static_cast<int>(std::ceil(Mp + 10.0 * sigma));
        // observed counts per integer (tails folded into the window ends)
        auto observed = [&](int m) {
            return m < static_cast<int>(pmf.size())
                       ? std::llround(pmf[static_cast<std::size_t>(m)].mean * R)
                       : 0LL;
        };
        long long obs_low = 0;
        for (int m = 0; m < wlo; ++m) obs_low += observed(m);
        long long obs_high = 0;
        for (int m = whi + 1; m <= std::max(whi, static_cast<int>(pmf.size())); ++m)
            obs_high += observed(m);
        // model probabilities: quadrature of the extremal density per bin,
        // closed-form tails
        std::vector<double> probs;
        std::vector<long long> counts;
        probs.push_back(cdf(wlo - 0.5));
        counts.push_back(obs_low);
        for (int m = wlo; m <= whi; ++m) {
            probs.push_back(integrate(
                [&](double x) { return extremal_density(x, params.M, params.p, params.N); },
                m - 0.5, m + 0.5, 1e-12));
            counts.push_back(observed(m));
        }
        probs.push_back(1.0 - cdf(whi + 0.5));
        counts.push_back(obs_high);
        // merge adjacent bins until every expected count is at least 5
        std::vector<double> mp;
        std::vector<long long> mc;
        double acc_p = 0.0;
        long long acc_c = 0;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            acc_p += probs[i];
            acc_c += counts[i];
            if (acc_p * R >= 5.0) {
                mp.push_back(acc_p);
                mc.push_back(acc_c);
                acc_p = 0.0;
                acc_c = 0;
            }
        }
        if (acc_p > 0.0 || acc_c > 0) {
            if (mp.empty()) {
                mp.push_back(acc_p);
                mc.push_back(acc_c);
            } else {
                mp.back() += acc_p;
                mc.back() += acc_c;
            }
        }
        double stat = 0.0;
        for (std::size_t i = 0; i < mp.size(); ++i) {
            const double expect = mp[i] * R;
            const double diff = static_cast<double>(mc[i]) - expect;
            stat += diff * diff / expect;
        }
        const int dof = static_cast<int>(mp.size()) - 1;
        const double pvalue = chi2_sf(stat, dof);
        legs.holds("max-sale histogram chi-square at 5%", pvalue >= 0.05,
                   "chi2 = " + format_g9(stat) + " with " + std::to_string(dof) +
                       " dof, p = " + format_g9(pvalue) + " vs level 0.05");
    }
    return std::move(legs).finish();
}

CheckResult check_tau(const CheckOptions& opt) {
    Legs legs("tau", opt);
    // (a) the three-permutation set with pairwise tau exactly -1/3
    {
        const std::vector<double> l1{3, 2, 1}, l2{2, 1, 3}, l3{1, 3, 2};
        const double t12 = kendall_tau(l1, l2);
        const double t13 = kendall_tau(l1, l3);
        const double t23 = kendall_tau(l2, l3);
        legs.holds("pairwise tau of the -1/3 triple",
                   t12 == -1.0 / 3.0 && t13 == -1.0 / 3.0 && t23 == -1.0 / 3.0,
                   "taus = " + format_g9(t12) + ", " + format_g9(t13) + ", " + format_g9(t23) +
                       " (exact -1/3 required)");
    }
    // (b) triangle bounds on 1000 random triples
    {
        Rng rng(derive_seed(opt.seed, 1001));
        int violations = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 30;
            std::vector<double> a(n), b(n), c(n);
            for (double& v : a) v = rng.u01();
            for (double& v : b) v = rng.u01();
            for (double& v : c) v = rng.u01();
            const double t12 = kendall_tau(a, b);
            const double t13 = kendall_tau(a, c);
            const double t23 = kendall_tau(b, c);
            const auto [lo, hi] = tau_triangle_bounds(t12, t13);
            if (t23 < lo - 1e-12 || t23 > hi + 1e-12) ++violations;
        }
        legs.holds("triangle inequality on 1000 random triples", violations == 0,
                   std::to_string(violations) + " violations (0 required)");
    }
    // (c) closed-form means at N = 2000 within 3 sample-SE
    {
        const int pairs = pick_R(legs, opt, 200);
        int idx = 0;
        for (const Scheme scheme : {Scheme::A, Scheme::B, Scheme::C}) {
            const char* sname = scheme == Scheme::A ? "A" : (scheme == Scheme::B ? "B" : "C");
            for (const TauWhich which : {TauWhich::xx, TauWhich::xy}) {
                for (const double t : {0.0, 0.25, 0.5, 0.75}) {
                    const TauEstimate est = sample_tau(scheme, t, 1.0, which, pairs, 2000,
                                                       derive_seed(opt.seed, 2000 + idx));
                    ++idx;
                    const double target = expected_tau(scheme, t, 1.0, which);
                    const double se = std::sqrt(est.variance / est.n_pairs);
                    const std::string label = std::string("scheme ") + sname +
                                              (which == TauWhich::xx ? " tau_xx" : " tau_xy") +
                                              " at t=" + format_g9(t);
                    if (se > 0.0)
                        legs.abs(label + " (3 SE = " + format_g9(3.0 * se) + ")",
                                 est.tau, target, 3.0 * se);
                    else
                        legs.exact(label, est.tau, target);
                }
            }
        }
    }
    // (d) ensemble variance of tau scales as 1/N
    {
        const int pairs = pick_R(legs, opt, 400);
        const TauEstimate v1 = sample_tau(Scheme::A, 0.5, 1.0, TauWhich::xx, pairs, 2000,
                                          derive_seed(opt.seed, 3001));
        const TauEstimate v2 = sample_tau(Scheme::A, 0.5, 1.0, TauWhich::xx, pairs, 4000,
                                          derive_seed(opt.seed, 3002));
        const double ratio = v1.variance / v2.variance;
        legs.abs("variance ratio when N doubles (2000 to 4000)", ratio, 2.0, 0.5);
    }
    return std::move(legs).finish();
}

CheckResult check_equicorrelated_bound(const CheckOptions& opt) {
    Legs legs("bound", opt);
    // all 24 permutations of length 4, exact pairwise taus
    std::vector<std::vector<double>> perms;
    std::vector<double> base{1, 2, 3, 4};
    std::sort(base.begin(), base.end());
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    const std::size_t P = perms.size();
    std::vector<std::vector<double>> tau(P, std::vector<double>(P, 1.0));
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = i + 1; j < P; ++j)
            tau[i][j] = tau[j][i] = kendall_tau(perms[i], perms[j]);

    for (const double tau0 : {-1.0, -1.0 / 3.0, 0.0, 0.5}) {
        // exhaustive max clique with all pairwise taus equal to tau0
        std::size_t best = 1;
        std::vector<std::size_t> stack;
        auto extend = [&](auto&& self, std::size_t from) -> void {
            best = std::max(best, stack.size());
            for (std::size_t v = from; v < P; ++v) {
                bool ok = true;
                for (const std::size_t u : stack)
                    if (tau[u][v] != tau0) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                stack.push_back(v);
                self(self, v + 1);
                stack.pop_back();
            }
        };
        extend(extend, 0);
        const int bound = max_equicorrelated(tau0, 4);
        legs.holds("exhaustive set size <= bound at tau0 = " + format_g9(tau0),
                   static_cast<int>(best) <= bound,
                   "largest set " + std::to_string(best) + " vs bound " + std::to_string(bound));
    }
    legs.exact("worked case tau0=0.2, N=5", max_equicorrelated(0.2, 5), 6.0);
    return std::move(legs).finish();
}

CheckResult check_correlated_market(const CheckOptions& opt) {
    Legs legs("correlated", opt);
    const MarketParams params(500, 2000, 0.05, 5.0);
    const int k_scan = 300;
    {
        const int R = pick_R(legs, opt, 300);
        for (const double t : {0.25, 0.5, 0.75}) {
            const ArgmaxResult am =
                argmax_k([&](int k) { return corr_expected_profit(params, t, k); }, k_scan);
            const RunSummary scan =
                sim_correlated_scan(params, Scheme::B, t, 1.0, k_scan, R, opt.seed);
            const auto& revenue = scan.series_of("revenue");
            int k_sim = 0;
            double best = 0.0;
            for (int k = 0; k <= k_scan; ++k) {
                const double v = revenue[static_cast<std::size_t>(k)].mean - k * params.Z;
                if (v > best) {
                    best = v;
                    k_sim = k;
                }
            }
            legs.abs("t=" + format_g9(t) + " optimum shelf size", k_sim, am.k, 3.0);
            legs.rel("t=" + format_g9(t) + " optimum profit", best, am.value, 0.07);
        }
    }
    {
        // anti-aligned tastes: variants below the demand threshold sell nothing
        const int R = pick_R(legs, opt, 50);
        const int amin = alpha_min(params.N, params.p, 0.1);
        legs.exact("demand threshold index at t=0.1", amin, 1001.0);
        const RunSummary run =
            sim_correlated(params, Scheme::B, 0.1, -1.0, amin - 1, R, opt.seed);
        const auto& sales = run.series_of("sales");
        double total = 0.0;
        for (const Stat& st : sales) total += st.mean;
        legs.exact("total sales below the threshold", total, 0.0);
    }
    {
        // fully bound tastes: one variant satisfies the whole market
        const int R = pick_R(legs, opt, 200);
        const RunSummary scan =
            sim_correlated_scan(params, Scheme::B, 1.0, 1.0, 20, R, opt.seed);
        const auto& revenue = scan.series_of("revenue");
        int k_sim = 0;
        double best = 0.0;
        for (int k = 0; k <= 20; ++k) {
            const double v = revenue[static_cast<std::size_t>(k)].mean - k * params.Z;
            if (v > best) {
                best = v;
                k_sim = k;
            }
        }
        legs.exact("optimum shelf size at s*t = 1", k_sim, 1.0);
        const RunSummary one = sim_correlated(params, Scheme::B, 1.0, 1.0, 1, R, opt.seed);
        legs.exact("market coverage at s*t = 1, k = 1", one.scalar("coverage").mean, 1.0);
    }
    return std::move(legs).finish();
}

CheckResult check_matching(const CheckOptions& opt) {
    Legs legs("matching", opt);
    {
        const int R = pick_R(legs, opt, 20000);
        const RunSummary run = sim_matching(1000, 5, 10, R, opt.seed);
        const MatchingMeans mm = matching_means(1000, 5, 10);
        legs.rel("consensus rank of the winner", run.scalar("b").mean, mm.mean_b, 0.10);
        legs.rel("buyer cost of the winner", run.scalar("x").mean, mm.mean_x, 0.10);
        legs.rel("vendor rank of the winner", run.scalar("vendor_rank").mean,
                 (1.0 + 10.0) / 2.0, 0.02);
    }
    {
        const int R = pick_R(legs, opt, 20000);
        const RunSummary run = sim_multi_variant(2, 1, R, opt.seed);
        const Stat& b = run.scalar("b");
        legs.abs("two-variant mean preference rank (4 SE = " + format_g9(4.0 * b.se) + ")",
                 b.mean, 1.5, 4.0 * b.se);
        // buyer cost 1/(d+1), independent of the crowd size
        std::vector<Stat> xs;
        for (const int buyers : {1, 10, 100}) {
            const RunSummary mr =
                sim_multi_variant(2, 1, R, derive_seed(opt.seed, 4000 + buyers), buyers);
            const Stat& x = mr.scalar("x");
            xs.push_back(x);
            legs.abs("mean buyer cost with " + std::to_string(buyers) + " buyer(s) (4 SE = " +
                         format_g9(4.0 * x.se) + ")",
                     x.mean, 0.5, 4.0 * x.se);
        }
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
                const double tol = 3.0 * std::hypot(xs[i].se, xs[j].se);
                legs.abs("buyer-cost spread pair " + std::to_string(i) + "," + std::to_string(j) +
                             " (3 SE = " + format_g9(tol) + ")",
                         xs[i].mean, xs[j].mean, tol);
            }
    }
    return std::move(legs).finish();
}

CheckResult check_determinism(const CheckOptions& opt) {
    Legs legs("determinism", opt);
    std::vector<ExperimentConfig> cfgs;
    {
        ExperimentConfig c;
        c.scenario = "uninformed";
        c.M = 200;
        c.N = 500;
        c.p = 0.05;
        c.Z = 2.0;
        c.R = 40;
        c.seed = opt.seed;
        c.sweep = parse_sweep("k=5..25:5");
        cfgs.push_back(c);
    }
    {
        ExperimentConfig c;
        c.scenario = "tau";
        c.scheme = "C";
        c.N = 300;
        c.R = 30;
        c.seed = opt.seed;
        c.sweep = parse_sweep("t=0..1:0.5");
        cfgs.push_back(c);
    }
    {
        ExperimentConfig c;
        c.scenario = "matching";
        c.M = 3;
        c.N = 100;
        c.d = 4;
        c.R = 50;
        c.seed = opt.seed;
        cfgs.push_back(c);
    }
    const char* saved = std::getenv("HETMARKET_THREADS");
    const std::string saved_value = saved ? saved : "";
    for (const ExperimentConfig& cfg : cfgs) {
        ::setenv("HETMARKET_THREADS", "1", 1);
        const std::string csv1 = to_csv(run_experiment(cfg));
        const std::string csv1b = to_csv(run_experiment(cfg));
        ::setenv("HETMARKET_THREADS", "8", 1);
        const std::string csv8 = to_csv(run_experiment(cfg));
        legs.holds("scenario " + cfg.scenario + " rerun is byte-identical", csv1 == csv1b,
                   csv1 == csv1b ? "identical" : "rerun differs with 1 thread");
        legs.holds("scenario " + cfg.scenario + " identical with 1 and 8 threads", csv1 == csv8,
                   csv1 == csv8 ? "identical" : "outputs differ across thread counts");
    }
    if (saved)
        ::setenv("HETMARKET_THREADS", saved_value.c_str(), 1);
    else
        ::unsetenv("HETMARKET_THREADS");
    return std::move(legs).finish();
}

std::vector<std::string> suite_names() {
    return {"uninformed", "idle", "sequential", "duopoly", "informed",
            "tau",        "bound", "correlated", "matching", "determinism"};
}

std::vector<CheckResult> run_suite(const std::string& name, const CheckOptions& opt) {
    std::vector<CheckResult> out;
    auto run_one = [&](const std::string& n) {
        if (n == "uninformed") out.push_back(check_uninformed_optimum(opt));
        else if (n == "idle") out.push_back(check_idle_threshold(opt));
        else if (n == "sequential") out.push_back(check_sequential(opt));
        else if (n == "duopoly") out.push_back(check_duopoly(opt));
        else if (n == "informed") out.push_back(check_informed(opt));
        else if (n == "tau") out.push_back(check_tau(opt));
        else if (n == "bound") out.push_back(check_equicorrelated_bound(opt));
        else if (n == "correlated") out.push_back(check_correlated_market(opt));
        else if (n == "matching") out.push_back(check_matching(opt));
        else if (n == "determinism") out.push_back(check_determinism(opt));
        else throw std::invalid_argument("unknown suite '" + n + "'");
    };
    if (name == "all") {
        for (const std::string& n : suite_names()) run_one(n);
    } else {
        run_one(name);
    }
    return out;
}

} // namespace hetmarket::checks
