#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hetmarket {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "var=a..b[:step]": inclusive range; step defaults to 1, or (hi-lo)/10 when
// the span is at most 2 (fine grids for t-like variables).
struct SweepSpec {
    std::string var;
    double lo = 0.0;
    double hi = 0.0;
    double step = 1.0;

    std::vector<double> values() const;
};

SweepSpec parse_sweep(const std::string& text);

// Flat experiment description; defaults are the headline market parameters.
struct ExperimentConfig {
    std::string scenario = "uninformed";
    int M = 500;
    int N = 2000;
    double p = 0.05;
    double Z = 5.0;
    double Z1 = 5.0;
    double Z2 = 5.0;
    int k = -1;        // -1: scenario-specific default
    int k_max = -1;    // scan / optimizer cap; -1: scenario-specific default
    int d = 10;
    double t = 0.5;
    double s = 1.0;
    double tau0 = 0.0;
    std::string scheme = "B";
    int R = 1000;
    std::uint64_t seed = 1;
    std::string out;                 // CSV path; empty = stdout
    std::optional<SweepSpec> sweep;
    bool check = false;
    double tolerance_scale = 1.0;
    std::string suite = "all";
};

// Applies one key=value setting; throws ConfigError on unknown key or
// unparseable value.
void apply_key(ExperimentConfig& cfg, const std::string& key, const std::string& value);

// Loads a flat key=value file ('#' comments allowed); errors carry the line
// number.
void load_config_file(ExperimentConfig& cfg, const std::string& path);

struct ResultRow {
    double sweep_value = 0.0;
    std::string quantity;
    double analytic = 0.0;   // NaN when no closed form applies
    double sim_mean = 0.0;   // NaN when the row is analytic-only
    double sim_se = 0.0;
};

struct ExperimentResult {
    std::string scenario;
    std::string sweep_var;
    std::vector<ResultRow> rows;
    std::vector<std::string> notes;   // one summary line per quantity plus scenario notes
    int R = 0;
    std::uint64_t seed = 0;
};

// Runs the scenario named in the config over its sweep (or its single
// default point).  Throws ConfigError on unknown scenario or unsupported
// sweep variable.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// One-line header; floats with 9 significant digits; byte-stable for a
// given config.
std::string to_csv(const ExperimentResult& res);

std::string format_g9(double v);

// Smoke validation behind `run --check`: every row with both columns present
// must satisfy |sim - analytic| <= scale * max(4 SE, 0.1 |analytic| + 1).
struct ValidationOutcome {
    bool ok = true;
    std::vector<std::string> failures;
};

ValidationOutcome validate_rows(const ExperimentResult& res, double tolerance_scale);

} // namespace hetmarket
