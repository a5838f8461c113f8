// acceptance.hpp: the ten acceptance criteria as callable checks
//
// Each check returns a deterministic detail string (fixed-precision numbers,
// no timings) so that `nessfi verify` output is byte-stable across runs.
// Runtime limits are enforced by the acceptance test binary, not here.

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace nessfi::verify {

struct CriterionResult {
    int id{0};
    std::string name;
    bool passed{false};
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_seconds;  // <= 0: no stated limit
    std::function<CriterionResult()> run;
};

const std::vector<Criterion>& acceptance_criteria();

CriterionResult gibbs_recovery();          // 1
CriterionResult leading_order_slope();     // 2
CriterionResult current_conservation();    // 3
CriterionResult epr_positivity();          // 4
CriterionResult qfi_cross_validation();    // 5
CriterionResult weak_tunneling_enhancement();  // 6
CriterionResult strong_tunneling_suppression(); // 7
CriterionResult correlation_structure();   // 8
CriterionResult discord_oracle();          // 9
CriterionResult determinism();             // 10

// "PASS  3 name: detail" / "FAIL ..."
std::string format_result(const CriterionResult& r);

} // namespace nessfi::verify
