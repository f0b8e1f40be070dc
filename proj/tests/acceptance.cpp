// Acceptance gate: runs the built-in verification suite criterion by
// criterion, printing one PASS/FAIL line each, and enforces the runtime
// budgets on the expensive ones. Exits nonzero when anything fails.

#include <cstdio>
#include <map>

#include "thinset/verify.hpp"

int main() {
    // seconds allowed per criterion; missing = no limit beyond the harness
    const std::map<int, double> budgets = {
        {1, 30.0}, {3, 1.0}, {6, 60.0}, {7, 120.0}, {8, 300.0},
    };

    bool ok = true;
    for (int index = 1; index <= 10; ++index) {
        thinset::CriterionResult r = thinset::run_criterion(index);
        bool in_budget = true;
        auto it = budgets.find(index);
        if (it != budgets.end() && r.seconds > it->second) in_budget = false;

        std::printf("%s criterion %d (%s): %s [%.2fs]\n",
                    r.passed && in_budget ? "PASS" : "FAIL", r.index, r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        if (!in_budget)
            std::printf("     exceeded the %.0fs budget for criterion %d\n", it->second,
                        index);
        ok = ok && r.passed && in_budget;
    }
    std::printf("%s\n", ok ? "acceptance: all criteria passed"
                           : "acceptance: FAILURES above");
    return ok ? 0 : 1;
}
