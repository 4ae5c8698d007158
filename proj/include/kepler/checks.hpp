#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kepler::checks {

struct CheckOptions {
    std::vector<double> eps_grid = {0.1, 0.3, 0.5, 0.7, 0.9};
    std::uint64_t seed = 12345;
    bool fail_inject = false;  // corrupt one result, for testing the harness
};

struct CheckResult {
    std::string name;
    double worst = 0.0;  // worst measured error
    double tol = 0.0;
    bool pass = false;
};

/// Runs every invariant group of the library (geometry identities, dynamics
/// conservation laws, the closed-form/quadrature cross-check, the speed and
/// time-law properties, the planet table) and reports the worst measured
/// error per group against its documented tolerance.
std::vector<CheckResult> run_all(const CheckOptions& opts);

}  // namespace kepler::checks
