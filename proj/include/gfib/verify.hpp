#pragma once

#include <string>
#include <vector>

namespace gfib {

// One named invariant check, aggregating a whole parameter sweep. `detail`
// describes the sweep on success and pinpoints the first offender on failure.
struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> results;

    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

// Per-module invariant suites (the documented property sweeps).
VerifyReport verify_roots();
VerifyReport verify_exact();
VerifyReport verify_combinatorics();
VerifyReport verify_closedform();
VerifyReport verify_renewal();

// Every suite in sequence.
VerifyReport verify_all();

}  // namespace gfib
