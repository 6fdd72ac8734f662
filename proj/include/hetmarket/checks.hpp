#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hetmarket::checks {

struct CheckOptions {
    std::uint64_t seed = 1;
    int R_override = 0;           // 0: per-criterion defaults
    double tolerance_scale = 1.0; // scales every tolerance; <= 0 fails everything
};

struct CheckResult {
    std::string name;
    bool passed = true;
    bool warned = false;
    std::vector<std::string> lines;   // one "PASS/FAIL leg: measured, target, tolerance" per leg
};

// Criterion checks.  Each one validates a cluster of claims against fixed
// targets and tolerances; a criterion passes only if every leg passes.
CheckResult check_uninformed_optimum(const CheckOptions& opt);
CheckResult check_idle_threshold(const CheckOptions& opt);
CheckResult check_sequential(const CheckOptions& opt);
CheckResult check_duopoly(const CheckOptions& opt);
CheckResult check_informed(const CheckOptions& opt);
CheckResult check_tau(const CheckOptions& opt);
CheckResult check_equicorrelated_bound(const CheckOptions& opt);
CheckResult check_correlated_market(const CheckOptions& opt);
CheckResult check_matching(const CheckOptions& opt);
CheckResult check_determinism(const CheckOptions& opt);

// Suite registry: names accepted by run_suite plus "all".
std::vector<std::string> suite_names();

// Runs the named criterion (or all of them).  Throws std::invalid_argument
// on an unknown name.
std::vector<CheckResult> run_suite(const std::string& name, const CheckOptions& opt);

} // namespace hetmarket::checks
