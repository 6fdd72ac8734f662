#include "hetmarket/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "hetmarket/analytic.hpp"
#include "hetmarket/correlation.hpp"
#include "hetmarket/simulate.hpp"
#include "hetmarket/solve.hpp"

namespace hetmarket {

namespace {

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

int to_int(double v) { return static_cast<int>(std::lround(v)); }

Scheme parse_scheme(const std::string& name) {
    if (name == "A" || name == "a") return Scheme::A;
    if (name == "B" || name == "b") return Scheme::B;
    if (name == "C" || name == "c") return Scheme::C;
    throw ConfigError("unknown scheme '" + name + "' (expected A, B, or C)");
}

} // namespace

std::vector<double> SweepSpec::values() const {
    if (step <= 0.0) throw ConfigError("sweep step must be positive");
    if (hi < lo) throw ConfigError("sweep range must have hi >= lo");
    // index-based so accumulated rounding cannot drop or distort the endpoint
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(std::min(lo + static_cast<double>(i) * step, hi));
    return out;
}

SweepSpec parse_sweep(const std::string& text) {
    const auto eq = text.find('=');
    const auto dots = text.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq)
        throw ConfigError("sweep must look like var=a..b[:step], got '" + text + "'");
    SweepSpec spec;
    spec.var = text.substr(0, eq);
    const std::string lo_s = text.substr(eq + 1, dots - eq - 1);
    std::string rest = text.substr(dots + 2);
    std::string step_s;
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
        step_s = rest.substr(colon + 1);
        rest = rest.substr(0, colon);
    }
    try {
        spec.lo = std::stod(lo_s);
        spec.hi = std::stod(rest);
        if (!step_s.empty()) {
            spec.step = std::stod(step_s);
        } else {
            spec.step = (spec.hi - spec.lo) <= 2.0 && spec.hi > spec.lo
                            ? (spec.hi - spec.lo) / 10.0
                            : 1.0;
        }
    } catch (const std::exception&) {
        throw ConfigError("sweep bounds must be numeric in '" + text + "'");
    }
    if (spec.var.empty()) throw ConfigError("sweep variable name is empty");
    return spec;
}

void apply_key(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    auto as_int = [&](const char* name) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
            return v;
        } catch (const std::exception&) {
            throw ConfigError(std::string("value for '") + name + "' must be an integer, got '" + value + "'");
        }
    };
    auto as_real = [&](const char* name) {
        try {
            std::size_t used = 0;
            const double v = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
            return v;
        } catch (const std::exception&) {
            throw ConfigError(std::string("value for '") + name + "' must be numeric, got '" + value + "'");
        }
    };
    if (key == "scenario") cfg.scenario = value;
    else if (key == "M") cfg.M = as_int("M");
    else if (key == "N") cfg.N = as_int("N");
    else if (key == "p") cfg.p = as_real("p");
    else if (key == "Z") cfg.Z = as_real("Z");
    else if (key == "Z1") cfg.Z1 = as_real("Z1");
    else if (key == "Z2") cfg.Z2 = as_real("Z2");
    else if (key == "k") cfg.k = as_int("k");
    else if (key == "k_max") cfg.k_max = as_int("k_max");
    else if (key == "d") cfg.d = as_int("d");
    else if (key == "t") cfg.t = as_real("t");
    else if (key == "s") cfg.s = as_real("s");
    else if (key == "tau0") cfg.tau0 = as_real("tau0");
    else if (key == "scheme") cfg.scheme = value;
    else if (key == "R" || key == "realizations") cfg.R = as_int("R");
    else if (key == "seed") {
        try {
            cfg.seed = std::stoull(value);
        } catch (const std::exception&) {
            throw ConfigError("value for 'seed' must be an unsigned integer, got '" + value + "'");
        }
    }
    else if (key == "out") cfg.out = value;
    else if (key == "sweep") cfg.sweep = parse_sweep(value);
    else if (key == "check") cfg.check = (value == "1" || value == "true" || value == "yes");
    else if (key == "tolerance_scale") cfg.tolerance_scale = as_real("tolerance_scale");
    else if (key == "suite") cfg.suite = value;
    else throw ConfigError("unknown key '" + key + "'");
}

void load_config_file(ExperimentConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            apply_key(cfg, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

std::string format_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

namespace {

void add_row(ExperimentResult& res, double sweep_value, std::string quantity,
             double analytic, double sim_mean, double sim_se) {
    res.rows.push_back({sweep_value, std::move(quantity), analytic, sim_mean, sim_se});
}

// ----- scenario implementations ------------------------------------------

void run_uninformed(const ExperimentConfig& cfg, ExperimentResult& res) {
    const std::string var = cfg.sweep ? cfg.sweep->var : std::string("k");
    if (var == "Z") {
        const std::vector<double> zs = cfg.sweep->values();
        MarketParams params(cfg.M, cfg.N, cfg.p, 0.0);
        // generous scan range: past the largest analytic optimum over the sweep
        int k_scan = cfg.k_max;
        if (k_scan <= 0) {
            double k_hi = 10.0;
            for (double z : zs) {
                params.Z = z;
                const KoptResult kr = kopt_uninformed(params);
                k_hi = std::max(k_hi, kr.k_opt);
            }
            k_scan = std::min(cfg.N, static_cast<int>(std::ceil(1.8 * k_hi)) + 5);
        }
        const RunSummary scan = sim_uninformed_scan(params, k_scan, cfg.R, cfg.seed);
        const auto& revenue = scan.series_of("revenue");
        for (double z : zs) {
            params.Z = z;
            const KoptResult kr = kopt_uninformed(params);
            int k_star = 0;
            double best = 0.0;
            for (int k = 0; k <= k_scan; ++k) {
                const double v = revenue[static_cast<std::size_t>(k)].mean - k * z;
                if (v > best) {
                    best = v;
                    k_star = k;
                }
            }
            add_row(res, z, "k_opt", kr.k_opt, k_star, 0.0);
            add_row(res, z, "X_opt", kr.x_opt, best, revenue[static_cast<std::size_t>(k_star)].se);
        }
        return;
    }
    if (var == "k") {
        MarketParams params(cfg.M, cfg.N, cfg.p, cfg.Z);
        std::vector<double> ks;
        if (cfg.sweep) {
            ks = cfg.sweep->values();
        } else {
            const KoptResult kr = kopt_uninformed(params);
            ks.push_back(cfg.k >= 0 ? cfg.k : std::max(1, to_int(kr.k_opt)));
        }
        int k_scan = 0;
        for (double k : ks) k_scan = std::max(k_scan, to_int(k));
        if (k_scan > cfg.N) throw ConfigError("k sweep exceeds N");
        const RunSummary scan = sim_uninformed_scan(params, k_scan, cfg.R, cfg.seed);
        const auto& revenue = scan.series_of("revenue");
        for (double kv : ks) {
            const int k = to_int(kv);
            const Stat& rev = revenue[static_cast<std::size_t>(k)];
            add_row(res, k, "profit", profit_uninformed(params, k), rev.mean - k * cfg.Z, rev.se);
        }
        return;
    }
    throw ConfigError("scenario 'uninformed' sweeps Z or k, not '" + var + "'");
}

void run_sequential(const ExperimentConfig& cfg, ExperimentResult& res) {
    const std::string var = cfg.sweep ? cfg.sweep->var : std::string("alpha");
    MarketParams params(cfg.M, cfg.N, cfg.p, cfg.Z);
    if (var == "alpha") {
        int k = cfg.k >= 0 ? cfg.k : std::max(1, to_int(kopt_sequential(cfg.M, cfg.p, cfg.Z)) + 5);
        std::vector<double> alphas;
        if (cfg.sweep) {
            alphas = cfg.sweep->values();
            for (double a : alphas) k = std::max(k, to_int(a));
        } else {
            for (int a = 1; a <= k; ++a) alphas.push_back(a);
        }
        if (k > cfg.N) throw ConfigError("alpha sweep exceeds N");
        const RunSummary run = sim_sequential(params, FixedK{k}, cfg.R, cfg.seed);
        const auto& sales = run.series_of("sales");
        for (double av : alphas) {
            const int a = to_int(av);
            if (a < 1 || a > k) throw ConfigError("alpha must lie in 1..k");
            const Stat& st = sales[static_cast<std::size_t>(a - 1)];
            add_row(res, a, "sales", sequential_sales(cfg.M, cfg.p, a), st.mean, st.se);
        }
        return;
    }
    if (var == "M") {
        for (double mv : cfg.sweep->values()) {
            const int M = to_int(mv);
            MarketParams pm(M, cfg.N, cfg.p, cfg.Z);
            const RunSummary run = sim_sequential(pm, GreedyRule{}, cfg.R, cfg.seed);
            const Stat& st = run.scalar("stop_k");
            add_row(res, M, "stop_k", kopt_sequential(M, cfg.p, cfg.Z), st.mean, st.se);
        }
        return;
    }
    if (var == "k") {
        std::vector<double> ks = cfg.sweep->values();
        for (double kv : ks) {
            const int k = to_int(kv);
            if (k < 0 || k > cfg.N) throw ConfigError("k sweep exceeds N");
            const RunSummary run = sim_sequential(params, FixedK{k}, cfg.R, cfg.seed);
            // analytic composite: expected sales per rank times expected margin
            double analytic = -k * cfg.Z;
            for (int a = 1; a <= k; ++a)
                analytic += sequential_sales(cfg.M, cfg.p, a) *
                            (1.0 - static_cast<double>(a) / (cfg.N + 1.0));
            const Stat& st = run.scalar("profit");
            add_row(res, k, "profit", analytic, st.mean, st.se);
        }
        return;
    }
    throw ConfigError("scenario 'sequential' sweeps alpha, M, or k, not '" + var + "'");
}

void run_duopoly(const ExperimentConfig& cfg, ExperimentResult& res) {
    const std::string var = cfg.sweep ? cfg.sweep->var : std::string("Z1");
    if (var != "Z1" && var != "Z2")
        throw ConfigError("scenario 'duopoly' sweeps Z1 or Z2, not '" + var + "'");
    std::vector<double> zs = cfg.sweep ? cfg.sweep->values() : std::vector<double>{cfg.Z1};
    const int k_max = cfg.k_max > 0 ? cfg.k_max : cfg.N;
    for (double z : zs) {
        const double Z1 = var == "Z1" ? z : cfg.Z1;
        const double Z2 = var == "Z2" ? z : cfg.Z2;
        const EquilibriumResult eq = duopoly_equilibrium(cfg.M, cfg.p, Z1, Z2, k_max);
        add_row(res, z, "k1", eq.k1, nan_v, nan_v);
        add_row(res, z, "k2", eq.k2, nan_v, nan_v);
        double sim1 = nan_v, sim2 = nan_v, se1 = nan_v, se2 = nan_v;
        if (eq.k1 + eq.k2 > 0 && eq.k1 + eq.k2 <= cfg.N) {
            MarketParams params(cfg.M, cfg.N, cfg.p, 0.0);
            const RunSummary run = sim_duopoly(params, Z1, Z2, eq.k1, eq.k2, cfg.R, cfg.seed);
            sim1 = run.scalar("X1").mean;
            se1 = run.scalar("X1").se;
            sim2 = run.scalar("X2").mean;
            se2 = run.scalar("X2").se;
        }
        add_row(res, z, "X1", eq.X1, sim1, se1);
        add_row(res, z, "X2", eq.X2, sim2, se2);
        if (!eq.converged)
            res.notes.push_back("note: best responses cycled at " + format_g9(z) + " between (" +
                                std::to_string(eq.cycle[0].first) + "," + std::to_string(eq.cycle[0].second) + ") and (" +
                                std::to_string(eq.cycle[1].first) + "," + std::to_string(eq.cycle[1].second) + ")");
    }
    if (cfg.Z2 > 0.0 && cfg.Z2 < cfg.M * cfg.p)
        res.notes.push_back("note: analytic price-out Z1* = " +
                            format_g9(duopoly_priceout(cfg.M, cfg.p, cfg.Z2)) + " at Z2 = " +
                            format_g9(cfg.Z2));
}

void run_informed(const ExperimentConfig& cfg, ExperimentResult& res) {
    const std::string var = cfg.sweep ? cfg.sweep->var : std::string("M");
    if (var != "M" && var != "N")
        throw ConfigError("scenario 'informed' sweeps M or N, not '" + var + "'");
    std::vector<double> vals = cfg.sweep ? cfg.sweep->values() : std::vector<double>{static_cast<double>(cfg.M)};
    for (double v : vals) {
        const int M = var == "M" ? to_int(v) : cfg.M;
        const int N = var == "N" ? to_int(v) : cfg.N;
        MarketParams params(M, N, cfg.p, cfg.Z);
        const RunSummary run = sim_informed_max(params, cfg.R, cfg.seed);
        double gain = nan_v, mode = nan_v;
        try {
            gain = informed_gain(M, cfg.p, N);
        } catch (const std::domain_error&) {}
        try {
            mode = most_probable_max_sale(M, cfg.p, N);
        } catch (const std::domain_error&) {}
        add_row(res, v, "delta_hat", gain, run.scalar("delta_hat").mean, run.scalar("delta_hat").se);
        add_row(res, v, "m_mode", mode, run.scalar("m_mode").mean, 0.0);
        add_row(res, v, "m_mean", nan_v, run.scalar("m_mean").mean, run.scalar("m_mean").se);
    }
}

void run_correlated(const ExperimentConfig& cfg, ExperimentResult& res) {
    const Scheme scheme = parse_scheme(cfg.scheme);
    const bool analytic_ok = scheme == Scheme::B && cfg.s > 0;
    MarketParams params(cfg.M, cfg.N, cfg.p, cfg.Z);
    const int k_scan = cfg.k_max > 0 ? cfg.k_max : std::min(cfg.N, 300);
    const std::string var = cfg.sweep ? cfg.sweep->var : std::string("t");
    if (var == "t") {
        std::vector<double> ts = cfg.sweep ? cfg.sweep->values() : std::vector<double>{cfg.t};
        for (double t : ts) {
            const RunSummary scan = sim_correlated_scan(params, scheme, t, cfg.s, k_scan, cfg.R, cfg.seed);
            const auto& revenue = scan.series_of("revenue");
            int k_sim = 0;
            double best_sim = 0.0;
            for (int k = 0; k <= k_scan; ++k) {
                const double v = revenue[static_cast<std::size_t>(k)].mean - k * cfg.Z;
                if (v > best_sim) {
                    best_sim = v;
                    k_sim = k;
                }
            }
            double k_ana = nan_v, x_ana = nan_v;
            if (analytic_ok) {
                const ArgmaxResult am =
                    argmax_k([&](int k) { return corr_expected_profit(params, t, k); }, k_scan);
                k_ana = am.k;
                x_ana = am.value;
            }
            add_row(res, t, "k_opt", k_ana, k_sim, 0.0);
            add_row(res, t, "X_opt", x_ana, best_sim, revenue[static_cast<std::size_t>(k_sim)].se);
        }
        return;
    }
    if (var == "k") {
        std::vector<double> ks = cfg.sweep->values();
        int hi = 0;
        for (double kv : ks) hi = std::max(hi, to_int(kv));
        if (hi > cfg.N) throw ConfigError("k sweep exceeds N");
        const RunSummary scan = sim_correlated_scan(params, scheme, cfg.t, cfg.s, hi, cfg.R, cfg.seed);
        const auto& revenue = scan.series_of("revenue");
        for (double kv : ks) {
            const int k = to_int(kv);
            const Stat& rev = revenue[static_cast<std::size_t>(k)];
            const double analytic = analytic_ok ? corr_expected_profit(params, cfg.t, k) : nan_v;
            add_row(res, k, "profit", analytic, rev.mean - k * cfg.Z, rev.se);
        }
        return;
    }
    throw ConfigError("scenario 'correlated' sweeps t or k, not '" + var + "'");
}

void run_matching(const ExperimentConfig& cfg, ExperimentResult& res) {
    const std::string var = cfg.sweep ? cfg.sweep->var : std::string("d");
    if (var != "d") throw ConfigError("scenario 'matching' sweeps d, not '" + var + "'");
    std::vector<double> ds = cfg.sweep ? cfg.sweep->values() : std::vector<double>{static_cast<double>(cfg.d)};
    for (double dv : ds) {
        const int d = to_int(dv);
        const RunSummary run = sim_matching(cfg.N, cfg.M, d, cfg.R, cfg.seed);
        const MatchingMeans mm = matching_means(cfg.N, cfg.M, d);
        add_row(res, d, "b", mm.mean_b, run.scalar("b").mean, run.scalar("b").se);
        add_row(res, d, "x", mm.mean_x, run.scalar("x").mean, run.scalar("x").se);
        add_row(res, d, "y", mm.mean_y, run.scalar("y").mean, run.scalar("y").se);
        add_row(res, d, "vendor_rank", (1.0 + d) / 2.0, run.scalar("vendor_rank").mean,
                run.scalar("vendor_rank").se);
    }
}

void run_multivariant(const ExperimentConfig& cfg, ExperimentResult& res) {
    const std::string var = cfg.sweep ? cfg.sweep->var : std::string("d");
    if (var != "d") throw ConfigError("scenario 'multivariant' sweeps d, not '" + var + "'");
    std::vector<double> ds = cfg.sweep ? cfg.sweep->values() : std::vector<double>{static_cast<double>(cfg.d)};
    for (double dv : ds) {
        const int d = to_int(dv);
        const RunSummary run = sim_multi_variant(cfg.N, d, cfg.R, cfg.seed);
        const MultiVariantB law = multi_variant_b(cfg.N, d);
        add_row(res, d, "b", law.mean_exact, run.scalar("b").mean, run.scalar("b").se);
        add_row(res, d, "x", 1.0 / (d + 1.0), run.scalar("x").mean, run.scalar("x").se);
    }
}

void run_tau(const ExperimentConfig& cfg, ExperimentResult& res) {
    const Scheme scheme = parse_scheme(cfg.scheme);
    const std::string var = cfg.sweep ? cfg.sweep->var : std::string("t");
    if (var != "t") throw ConfigError("scenario 'tau' sweeps t, not '" + var + "'");
    std::vector<double> ts = cfg.sweep ? cfg.sweep->values() : std::vector<double>{cfg.t};
    for (double t : ts) {
        for (const TauWhich which : {TauWhich::xx, TauWhich::xy}) {
            const TauEstimate est = sample_tau(scheme, t, cfg.s, which, cfg.R, cfg.N, cfg.seed);
            const double se = std::sqrt(est.variance / est.n_pairs);
            add_row(res, t, which == TauWhich::xx ? "tau_xx" : "tau_xy",
                    expected_tau(scheme, t, cfg.s, which), est.tau, se);
        }
    }
}

void run_equicorr(const ExperimentConfig& cfg, ExperimentResult& res) {
    const std::string var = cfg.sweep ? cfg.sweep->var : std::string("tau0");
    if (var != "tau0") throw ConfigError("scenario 'equicorr' sweeps tau0, not '" + var + "'");
    std::vector<double> taus = cfg.sweep ? cfg.sweep->values() : std::vector<double>{cfg.tau0};
    for (double tau0 : taus) {
        const int ba = max_equicorrelated(tau0, cfg.N, BoundForm::doubled_log);
        const int bm = max_equicorrelated(tau0, cfg.N, BoundForm::single_log);
        const double va = ba == unbounded_lists ? std::numeric_limits<double>::infinity() : ba;
        const double vm = bm == unbounded_lists ? std::numeric_limits<double>::infinity() : bm;
        add_row(res, tau0, "max_lists", va, nan_v, nan_v);
        add_row(res, tau0, "max_lists_single_log", vm, nan_v, nan_v);
    }
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.R < 1) throw ConfigError("R must be at least 1");
    ExperimentResult res;
    res.scenario = cfg.scenario;
    res.R = cfg.R;
    res.seed = cfg.seed;
    if (cfg.scenario == "uninformed") {
        res.sweep_var = cfg.sweep ? cfg.sweep->var : "k";
        run_uninformed(cfg, res);
    } else if (cfg.scenario == "sequential") {
        res.sweep_var = cfg.sweep ? cfg.sweep->var : "alpha";
        run_sequential(cfg, res);
    } else if (cfg.scenario == "duopoly") {
        res.sweep_var = cfg.sweep ? cfg.sweep->var : "Z1";
        run_duopoly(cfg, res);
    } else if (cfg.scenario == "informed") {
        res.sweep_var = cfg.sweep ? cfg.sweep->var : "M";
        run_informed(cfg, res);
    } else if (cfg.scenario == "correlated") {
        res.sweep_var = cfg.sweep ? cfg.sweep->var : "t";
        run_correlated(cfg, res);
    } else if (cfg.scenario == "matching") {
        res.sweep_var = cfg.sweep ? cfg.sweep->var : "d";
        run_matching(cfg, res);
    } else if (cfg.scenario == "multivariant") {
        res.sweep_var = cfg.sweep ? cfg.sweep->var : "d";
        run_multivariant(cfg, res);
    } else if (cfg.scenario == "tau") {
        res.sweep_var = cfg.sweep ? cfg.sweep->var : "t";
        run_tau(cfg, res);
    } else if (cfg.scenario == "equicorr") {
        res.sweep_var = cfg.sweep ? cfg.sweep->var : "tau0";
        run_equicorr(cfg, res);
    } else {
        throw ConfigError("unknown scenario '" + cfg.scenario + "'");
    }

    // one summary line per distinct quantity
    std::vector<std::string> seen;
    for (const ResultRow& row : res.rows) {
        if (std::find(seen.begin(), seen.end(), row.quantity) != seen.end()) continue;
        seen.push_back(row.quantity);
        int count = 0;
        double worst = 0.0;
        bool any = false;
        for (const ResultRow& r : res.rows) {
            if (r.quantity != row.quantity) continue;
            ++count;
            if (!std::isnan(r.analytic) && !std::isnan(r.sim_mean)) {
                worst = std::max(worst, std::abs(r.sim_mean - r.analytic));
                any = true;
            }
        }
        std::ostringstream line;
        line << row.quantity << ": " << count << " point(s)";
        if (any) line << ", max |sim - analytic| = " << format_g9(worst);
        res.notes.insert(res.notes.begin() + static_cast<std::ptrdiff_t>(seen.size() - 1), line.str());
    }
    return res;
}

std::string to_csv(const ExperimentResult& res) {
    std::ostringstream out;
    out << res.sweep_var << ",quantity,analytic,sim_mean,sim_se,R,seed\n";
    for (const ResultRow& row : res.rows) {
        out << format_g9(row.sweep_value) << ',' << row.quantity << ','
            << format_g9(row.analytic) << ',' << format_g9(row.sim_mean) << ','
            << format_g9(row.sim_se) << ',' << res.R << ',' << res.seed << '\n';
    }
    return out.str();
}

ValidationOutcome validate_rows(const ExperimentResult& res, double tolerance_scale) {
    ValidationOutcome out;
    for (const ResultRow& row : res.rows) {
        if (std::isnan(row.analytic) || std::isnan(row.sim_mean)) continue;
        const double se = std::isnan(row.sim_se) ? 0.0 : row.sim_se;
        const double tol = tolerance_scale * std::max(4.0 * se, 0.1 * std::abs(row.analytic) + 1.0);
        const double gap = std::abs(row.sim_mean - row.analytic);
        if (gap > tol) {
            out.ok = false;
            std::ostringstream line;
            line << row.quantity << " at " << res.sweep_var << " = " << format_g9(row.sweep_value)
                 << ": |" << format_g9(row.sim_mean) << " - " << format_g9(row.analytic)
                 << "| = " << format_g9(gap) << " > " << format_g9(tol);
            out.failures.push_back(line.str());
        }
    }
    return out;
}

} // namespace hetmarket
