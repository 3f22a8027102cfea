// Acceptance suite: runs every verification criterion at full bounds and
// prints one pass/fail line per criterion, then enforces the per-criterion
// runtime budgets and the end-to-end budget.
#include "polycosec/selftest.hpp"

#include <iomanip>
#include <iostream>

int main() {
    using namespace polycosec;

    const auto results = selftest::run_all(std::cout, /*quick=*/false);
    static const double budget_seconds[] = {1, 1, 30, 20, 20, 10, 15, 30, 5};

    bool ok = selftest::all_passed(results);
    double total = 0;
    for (const auto& r : results) {
        total += r.seconds;
        const double budget = budget_seconds[static_cast<std::size_t>(r.id - 1)];
        const bool in_budget = r.seconds < budget;
        std::cout << (in_budget ? "PASS" : "FAIL") << "  criterion " << r.id << " runtime "
                  << std::fixed << std::setprecision(2) << r.seconds << "s < " << budget
                  << "s budget\n";
        ok = ok && in_budget;
    }

    const bool end_to_end = ok && total < 180.0;
    std::cout << (end_to_end ? "PASS" : "FAIL") << "  criterion 10 end-to-end "
              << std::fixed << std::setprecision(2) << total << "s < 180s, all criteria green\n";
    return end_to_end ? 0 : 1;
}
