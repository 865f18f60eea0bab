#pragma once

#include <string>
#include <vector>

#include "ringcoul/model.hpp"

// Invariant suite behind `ringcoul check`: normalizations, the b=0
// reduction, radial node counts, the radial-equation residual, and the
// negative-order/conjugation identities, over a roster of states.

namespace ringcoul::checks {

struct CheckResult {
    std::string check;
    std::string state;
    double metric = 0.0;  // measured value
    double bound = 0.0;   // pass threshold on |metric|
    bool pass = false;
};

struct CheckReport {
    std::vector<CheckResult> results;
    int failures = 0;
};

// perturb_scale != 1 intentionally mis-scales the polar normalization
// inside the checks (mutation sanity hook); 1.0 is the honest run.
CheckReport run_checks(const std::vector<model::QuantumState>& roster, double perturb_scale = 1.0);

std::vector<model::QuantumState> default_roster();  // n <= 5, b in {0, 0.5, 10}

} // namespace ringcoul::checks
