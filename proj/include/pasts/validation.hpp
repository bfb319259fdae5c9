#pragma once

// Self-check suite behind `pasts validate`: every module invariant, the
// analytic-vs-oracle comparisons, and CSV determinism, each reported with
// its measured deviation.

#include <iosfwd>
#include <string>
#include <vector>

#include "pasts/fock_oracle.hpp"
#include "pasts/states.hpp"

namespace pasts::validation {

struct CheckResult {
    std::string module;
    std::string name;
    bool passed = false;
    double deviation = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct ValidationOptions {
    int oracle_dim = fock::kDefaultDim;
    /// Skip the Lindblad-integration checks.
    bool quick = false;
    /// Extra state compared against the oracle at oracle_dim.
    StateSpec state{0.3, 0.1, 1};
};

[[nodiscard]] std::vector<CheckResult> run_validation(const ValidationOptions& options);

/// One line per check: "PASS module.name deviation=... tol=...".
void print_report(std::ostream& os, const std::vector<CheckResult>& results);

[[nodiscard]] bool all_passed(const std::vector<CheckResult>& results);

}  // namespace pasts::validation
