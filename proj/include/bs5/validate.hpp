#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bs5::validate {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;   // the quantity compared against tolerance
    double tolerance = 0.0;
    std::string detail;      // human-readable context
    double runtime_sec = 0.0;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Quick suite: exact table/normalization checks, hypergeometric identities,
// ODE residuals, steady-state self-consistency, convergence trend.
// Full adds the Monte Carlo KS comparisons (k-step and steady state).
ValidationReport run_validation(bool full, std::uint64_t seed = 20260823);

std::string report_to_json(const ValidationReport& report);

}  // namespace bs5::validate
