// The tiered verification suite: ten numbered criteria, each returning one
// pass/fail result with per-subcheck detail lines. All equalities are exact
// (rational arithmetic, zero tolerance); the only non-exact quantities are
// the reported wall times.

#pragma once

#include <string>
#include <vector>

namespace gaudin {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::vector<std::string> details;  // "ok <subcheck>" / "FAIL <subcheck>"
};

// Runs one criterion (1..10). slow_tier widens criterion 8 to exponent 7;
// other criteria ignore the flag. Unknown ids throw argument_error.
CriterionResult run_criterion(int id, bool slow_tier);

// All criterion ids in order.
std::vector<int> criterion_ids();

// One-line render: "[PASS] criterion 3 (0.1s): quadratic singular vector".
std::string render_result_line(const CriterionResult& r);

}  // namespace gaudin
