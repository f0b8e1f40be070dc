#ifndef THINSET_TEST_HELPERS_HPP
#define THINSET_TEST_HELPERS_HPP

#include <cstdint>
#include <vector>

#include "thinset/approx_table.hpp"

namespace thinset::test {

// Table with every stage row equal to g(x) = a*x + c; constant stages make
// stage classifications coincide with truth.
inline ApproxTable affine_table(std::int64_t a, std::int64_t c, int domain, int stages = 0) {
    StagedTable t;
    t.stages = stages > 0 ? stages : domain;
    t.domain = domain;
    t.stable_bound = domain;
    std::vector<std::int64_t> row(domain);
    for (int x = 0; x < domain; ++x) row[x] = a * x + c;
    t.values.assign(t.stages, row);
    return ApproxTable::checked(std::move(t));
}

// A staircase that converges late: stages 0..4 claim g(x) = x+1, stages
// 5..9 the true row (2,3,5,6,7,8,9,10,11,12). Passes the table checker as
// written, yet the raw form misclassifies some intervals; the
// normalization recipe repairs it. Used to pin down why normalization
// strengthens the literal jump clause.
inline StagedTable late_staircase() {
    StagedTable t;
    t.stages = 10;
    t.domain = 10;
    t.stable_bound = 10;
    std::vector<std::int64_t> early(10), late = {2, 3, 5, 6, 7, 8, 9, 10, 11, 12};
    for (int x = 0; x < 10; ++x) early[x] = x + 1;
    for (int s = 0; s < 5; ++s) t.values.push_back(early);
    for (int s = 5; s < 10; ++s) t.values.push_back(late);
    return t;
}

} // namespace thinset::test

#endif
