#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polycosec::selftest {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    double seconds;
    std::string detail;
};

// Runs the full verification battery (criteria 1..9), printing one line per
// criterion with timing. `quick` shrinks the bounds for a fast smoke pass.
std::vector<CriterionResult> run_all(std::ostream& os, bool quick);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace polycosec::selftest
