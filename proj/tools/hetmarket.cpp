// Command-line front end: scenario sweeps to CSV plus the validation suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "hetmarket/checks.hpp"
#include "hetmarket/experiments.hpp"

namespace {

using hetmarket::ExperimentConfig;
using hetmarket::ExperimentResult;

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// Routes a flag through the same key=value parser as config files, so
// every setting shares one validation path and one set of error messages.
void add_key_flag(CLI::App* cmd, KeyValues* sink, const std::string& key,
                  const std::string& help) {
    cmd->add_option("--" + key, help)->each([sink, key](const std::string& v) {
        sink->emplace_back(key, v);
    });
}

void add_market_flags(CLI::App* cmd, KeyValues* sink) {
    add_key_flag(cmd, sink, "M", "number of buyers");
    add_key_flag(cmd, sink, "N", "number of variants");
    add_key_flag(cmd, sink, "p", "acceptance scale (0 < p < 1/2)");
    add_key_flag(cmd, sink, "Z", "per-variant production cost");
    add_key_flag(cmd, sink, "Z1", "vendor-1 per-variant cost (duopoly)");
    add_key_flag(cmd, sink, "Z2", "vendor-2 per-variant cost (duopoly)");
    add_key_flag(cmd, sink, "k", "offered variant count (scenario-specific default)");
    add_key_flag(cmd, sink, "k_max", "scan / optimizer cap (default: scenario-specific)");
    add_key_flag(cmd, sink, "d", "offered list length (matching scenarios)");
    add_key_flag(cmd, sink, "t", "taste binding parameter in [0,1]");
    add_key_flag(cmd, sink, "s", "taste alignment sign (+1 or -1)");
    add_key_flag(cmd, sink, "tau0", "pairwise tau for the equicorr scenario");
    add_key_flag(cmd, sink, "scheme", "correlation scheme A, B, or C");
}

void add_run_flags(CLI::App* cmd, KeyValues* sink) {
    add_key_flag(cmd, sink, "seed", "master seed (all realization seeds derive from it)");
    add_key_flag(cmd, sink, "realizations", "Monte Carlo realizations R");
    add_key_flag(cmd, sink, "out", "CSV output path (default: stdout)");
    add_key_flag(cmd, sink, "sweep", "sweep spec var=a..b[:step]");
    add_key_flag(cmd, sink, "tolerance_scale", "scales every validation tolerance");
}

// Writes the CSV, prints the per-quantity summary lines to stderr, and runs
// the smoke validation when asked.  Returns the process exit code.
int emit(const ExperimentConfig& cfg) {
    const ExperimentResult res = hetmarket::run_experiment(cfg);
    const std::string csv = hetmarket::to_csv(res);
    if (cfg.out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << cfg.out << "'\n";
            return 1;
        }
        out << csv;
    }
    for (const std::string& note : res.notes) std::cerr << note << '\n';
    if (cfg.check) {
        const hetmarket::ValidationOutcome v =
            hetmarket::validate_rows(res, cfg.tolerance_scale);
        if (!v.ok) {
            for (const std::string& f : v.failures) std::cerr << "check: " << f << '\n';
            return 2;
        }
        std::cerr << "check: all rows within tolerance\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"heterogeneous-taste market model: simulation, closed forms, validation"};
    app.require_subcommand(1);

    // --- run ---------------------------------------------------------------
    auto* run = app.add_subcommand("run", "simulate a scenario sweep and emit CSV");
    std::string run_scenario;
    std::string run_config;
    bool run_check = false;
    KeyValues run_kv;
    run->add_option("scenario", run_scenario,
                    "uninformed | sequential | duopoly | informed | correlated | "
                    "matching | multivariant | tau | equicorr")
        ->required();
    run->add_option("--config", run_config, "key=value config file (flags override it)");
    run->add_flag("--check", run_check, "validate sim against analytic rows; exit 2 on failure");
    add_market_flags(run, &run_kv);
    add_run_flags(run, &run_kv);

    // --- check -------------------------------------------------------------
    auto* check = app.add_subcommand("check", "run the validation suite");
    std::string check_suite = "all";
    std::string check_config;
    std::uint64_t check_seed = 1;
    int check_R = 0;
    double check_scale = 1.0;
    {
        std::string suites = "all";
        for (const std::string& n : hetmarket::checks::suite_names()) suites += " | " + n;
        check->add_option("suite", check_suite, suites);
    }
    check->add_option("--config", check_config, "key=value config file (suite, seed, ...)");
    auto* check_seed_opt = check->add_option("--seed", check_seed, "master seed");
    auto* check_R_opt =
        check->add_option("--realizations", check_R, "override per-criterion realization counts");
    auto* check_scale_opt =
        check->add_option("--tolerance_scale", check_scale,
                          "scales every tolerance; 0 fails deterministically");

    // --- tau ---------------------------------------------------------------
    auto* tau = app.add_subcommand("tau", "sample vs expected rank correlation for one scheme");
    std::string tau_scheme;
    KeyValues tau_kv;
    tau->add_option("scheme", tau_scheme, "A | B | C")->required();
    add_key_flag(tau, &tau_kv, "N", "list length");
    add_key_flag(tau, &tau_kv, "t", "taste binding parameter in [0,1]");
    add_key_flag(tau, &tau_kv, "s", "taste alignment sign (+1 or -1)");
    add_key_flag(tau, &tau_kv, "seed", "master seed");
    add_key_flag(tau, &tau_kv, "realizations", "list pairs per point");
    add_key_flag(tau, &tau_kv, "out", "CSV output path (default: stdout)");
    add_key_flag(tau, &tau_kv, "sweep", "sweep spec, e.g. t=0..1:0.25");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;   // usage errors are exit 1; --help is 0
    }

    try {
        if (run->parsed()) {
            ExperimentConfig cfg;
            if (!run_config.empty()) hetmarket::load_config_file(cfg, run_config);
            hetmarket::apply_key(cfg, "scenario", run_scenario);
            for (const auto& [key, value] : run_kv) hetmarket::apply_key(cfg, key, value);
            if (run_check) cfg.check = true;
            return emit(cfg);
        }
        if (tau->parsed()) {
            ExperimentConfig cfg;
            cfg.scenario = "tau";
            cfg.R = 200;
            hetmarket::apply_key(cfg, "scheme", tau_scheme);
            bool point_given = false;
            for (const auto& [key, value] : tau_kv) {
                hetmarket::apply_key(cfg, key, value);
                if (key == "t" || key == "sweep") point_given = true;
            }
            if (!point_given) cfg.sweep = hetmarket::parse_sweep("t=0..1");
            return emit(cfg);
        }
        // check
        ExperimentConfig cfg;
        if (!check_config.empty()) hetmarket::load_config_file(cfg, check_config);
        hetmarket::checks::CheckOptions opt;
        opt.seed = check_seed_opt->count() > 0 ? check_seed : cfg.seed;
        opt.R_override = check_R_opt->count() > 0 ? check_R : 0;
        opt.tolerance_scale = check_scale_opt->count() > 0 ? check_scale : cfg.tolerance_scale;
        const std::string suite = check->get_option("suite")->count() > 0 ? check_suite : cfg.suite;
        std::vector<hetmarket::checks::CheckResult> results;
        try {
            results = hetmarket::checks::run_suite(suite, opt);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 1;
        }
        int failed = 0;
        for (const auto& r : results) {
            std::cout << "== " << r.name << " ==\n";
            for (const std::string& line : r.lines) std::cout << "  " << line << '\n';
            std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.name << '\n';
            if (!r.passed) ++failed;
        }
        std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
                  << " criteria passed\n";
        return failed == 0 ? 0 : 2;
    } catch (const hetmarket::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
