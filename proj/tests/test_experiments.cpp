#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "hetmarket/experiments.hpp"

using namespace hetmarket;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
    std::ofstream out(name);
    out << body;
    return name;
}

} // namespace

TEST_CASE("sweep parsing") {
    const SweepSpec s = parse_sweep("Z=0.5..20:0.5");
    CHECK(s.var == "Z");
    CHECK(s.lo == 0.5);
    CHECK(s.hi == 20.0);
    CHECK(s.step == 0.5);
    CHECK(s.values().size() == 40u);

    // integer-flavored default step
    CHECK(parse_sweep("Z1=1..20").values().size() == 20u);
    // short real spans default to ten intervals
    const SweepSpec t = parse_sweep("t=0..1");
    CHECK(t.values().size() == 11u);
    CHECK(t.values().front() == 0.0);
    CHECK(t.values().back() == 1.0);
    // degenerate span is a single point
    CHECK(parse_sweep("k=5..5").values().size() == 1u);

    CHECK_THROWS_AS(parse_sweep("Z0.5..20"), ConfigError);
    CHECK_THROWS_AS(parse_sweep("Z=x..20"), ConfigError);
    CHECK_THROWS_AS(parse_sweep("Z=5..1").values(), ConfigError);
    CHECK_THROWS_AS(parse_sweep("=1..2"), ConfigError);
    CHECK_THROWS_AS(parse_sweep("Z=1..2:-1").values(), ConfigError);
}

TEST_CASE("key=value settings and strict value parsing") {
    ExperimentConfig cfg;
    apply_key(cfg, "M", "750");
    apply_key(cfg, "p", "0.02");
    apply_key(cfg, "scheme", "C");
    apply_key(cfg, "realizations", "77");
    apply_key(cfg, "sweep", "t=0..1:0.5");
    apply_key(cfg, "check", "true");
    CHECK(cfg.M == 750);
    CHECK(cfg.p == 0.02);
    CHECK(cfg.scheme == "C");
    CHECK(cfg.R == 77);
    REQUIRE(cfg.sweep.has_value());
    CHECK(cfg.sweep->var == "t");
    CHECK(cfg.check);
    CHECK_THROWS_AS(apply_key(cfg, "M", "12x"), ConfigError);
    CHECK_THROWS_AS(apply_key(cfg, "p", ""), ConfigError);
    CHECK_THROWS_AS(apply_key(cfg, "frobnicate", "1"), ConfigError);
    CHECK_THROWS_WITH_AS(apply_key(cfg, "banana", "1"),
                         doctest::Contains("unknown key 'banana'"), ConfigError);
}

TEST_CASE("config files: comments, trimming, line-numbered errors") {
    const std::string good = write_temp("cfg_good.tmp",
                                        "# comment line\n"
                                        "scenario = matching   # trailing comment\n"
                                        "  N = 100\n"
                                        "\n"
                                        "d=4\n");
    ExperimentConfig cfg;
    load_config_file(cfg, good);
    CHECK(cfg.scenario == "matching");
    CHECK(cfg.N == 100);
    CHECK(cfg.d == 4);

    const std::string bad = write_temp("cfg_bad.tmp", "N = 100\nM = 50\nwhat = 3\n");
    ExperimentConfig cfg2;
    CHECK_THROWS_WITH_AS(load_config_file(cfg2, bad), doctest::Contains(":3:"), ConfigError);

    const std::string noeq = write_temp("cfg_noeq.tmp", "N 100\n");
    CHECK_THROWS_WITH_AS(load_config_file(cfg2, noeq), doctest::Contains(":1:"), ConfigError);
    CHECK_THROWS_AS(load_config_file(cfg2, "does_not_exist.tmp"), ConfigError);
    std::remove(good.c_str());
    std::remove(bad.c_str());
    std::remove(noeq.c_str());
}

TEST_CASE("nine-significant-digit float formatting") {
    CHECK(format_g9(0.1) == "0.1");
    CHECK(format_g9(12.426698691192238) == "12.4266987");
    CHECK(format_g9(1.0 / 3.0) == "0.333333333");
    CHECK(format_g9(2500000000.0) == "2.5e+09");   // %g switches past nine digits
}

TEST_CASE("scenario run: rows, header, reproducible csv") {
    ExperimentConfig cfg;
    cfg.scenario = "uninformed";
    cfg.M = 100;
    cfg.N = 400;
    cfg.Z = 2.0;
    cfg.R = 60;
    cfg.seed = 5;
    cfg.sweep = parse_sweep("k=1..5");
    const ExperimentResult res = run_experiment(cfg);
    CHECK(res.sweep_var == "k");
    REQUIRE(res.rows.size() == 5u);
    for (const ResultRow& row : res.rows) {
        CHECK(row.quantity == "profit");
        CHECK_FALSE(std::isnan(row.analytic));
        CHECK_FALSE(std::isnan(row.sim_mean));
    }
    CHECK_FALSE(res.notes.empty());

    const std::string csv = to_csv(res);
    CHECK(csv.rfind("k,quantity,analytic,sim_mean,sim_se,R,seed\n", 0) == 0);
    CHECK(csv == to_csv(run_experiment(cfg)));
    // every row records R and the master seed for replay
    CHECK(csv.find(",60,5\n") != std::string::npos);
}

TEST_CASE("scenario dispatch covers every name and rejects bad sweeps") {
    ExperimentConfig cfg;
    cfg.scenario = "nope";
    CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
    cfg.scenario = "uninformed";
    cfg.sweep = parse_sweep("d=1..3");
    CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
    cfg.scenario = "matching";
    cfg.sweep = parse_sweep("t=0..1");
    CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
}

TEST_CASE("bound scenario emits analytic-only rows") {
    ExperimentConfig cfg;
    cfg.scenario = "equicorr";
    cfg.N = 5;
    cfg.sweep = parse_sweep("tau0=0.2..0.2");
    const ExperimentResult res = run_experiment(cfg);
    REQUIRE(res.rows.size() == 2u);
    CHECK(res.rows[0].quantity == "max_lists");
    CHECK(res.rows[0].analytic == 6.0);
    CHECK(res.rows[1].quantity == "max_lists_single_log");
    CHECK(res.rows[1].analytic == 4.0);
    CHECK(std::isnan(res.rows[0].sim_mean));
}

TEST_CASE("rank-correlation scenario sweeps the binding strength") {
    ExperimentConfig cfg;
    cfg.scenario = "tau";
    cfg.scheme = "C";
    cfg.N = 200;
    cfg.R = 40;
    cfg.sweep = parse_sweep("t=0..0.5:0.25");
    const ExperimentResult res = run_experiment(cfg);
    REQUIRE(res.rows.size() == 6u);   // xx and xy per sweep point
    for (const ResultRow& row : res.rows) {
        CHECK((row.quantity == "tau_xx" || row.quantity == "tau_xy"));
        CHECK(std::abs(row.sim_mean - row.analytic) < 6.0 * row.sim_se + 0.02);
    }
}

TEST_CASE("row validation tightens with the tolerance scale") {
    ExperimentConfig cfg;
    cfg.scenario = "uninformed";
    cfg.M = 200;
    cfg.N = 500;
    cfg.Z = 2.0;
    cfg.R = 150;
    cfg.sweep = parse_sweep("k=2..6:2");
    const ExperimentResult res = run_experiment(cfg);
    CHECK(validate_rows(res, 1.0).ok);
    const ValidationOutcome strict = validate_rows(res, 0.0);
    CHECK_FALSE(strict.ok);
    CHECK_FALSE(strict.failures.empty());
}
