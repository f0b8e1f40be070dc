#ifndef THINSET_VERIFY_HPP
#define THINSET_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace thinset {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyReport {
    std::vector<CriterionResult> results;
    bool all_passed() const;
};

inline constexpr uint64_t kDefaultVerifySeed = 7;

/// Runs one verification suite: "counts" (criteria 1-5), "colorings"
/// (criterion 6), "search" (criteria 7-9) or "all" (everything plus the
/// scope note 10). The seed drives every randomized sub-suite.
VerifyReport run_suite(const std::string& suite, uint64_t seed = kDefaultVerifySeed);

CriterionResult run_criterion(int index, uint64_t seed = kDefaultVerifySeed);

} // namespace thinset

#endif
