#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jones {

enum class CheckLevel { fast, full };

struct CheckCase {
    std::string name;
    bool pass = false;
    double worst = 0.0;     // worst residual observed (or 0/1 for boolean checks)
    double tolerance = 0.0;
    std::string detail;
};

struct CheckReport {
    CheckLevel level = CheckLevel::fast;
    bool all_pass = false;
    std::vector<CheckCase> cases;
};

// Runs the invariant suites of the representation, trace and estimator
// modules: TL relations, unitarity, Markov residuals, oracle equivalences,
// estimator statistics. fast trims the case counts; full runs the counts the
// invariants are stated with.
CheckReport run_checks(CheckLevel level, std::uint64_t seed = 2024);

} // namespace jones
