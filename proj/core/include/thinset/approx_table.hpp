#ifndef THINSET_APPROX_TABLE_HPP
#define THINSET_APPROX_TABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace thinset {

enum class Gap { small, large };

/// Raw stage-indexed values g_s(x) for s < stages, x < domain, plus a
/// declared bound below which the columns are claimed to converge.
struct StagedTable {
    int stages = 0;
    int domain = 0;
    int stable_bound = 0;
    std::vector<std::vector<std::int64_t>> values; // [stage][x]
};

/// Issues found by the invariant checker, empty when the table is admissible.
std::vector<std::string> check_staged_table(const StagedTable& t);

/// A staged table that passed the invariant checker:
///   - every row is strictly increasing in x,
///   - every column is non-decreasing in s,
///   - whenever a column at a jumps past x+1 between stages s and s+1,
///     the next stage holds value >= max(s+1, x+1) at position x+1,
///   - below stable_bound the last two rows agree (columns have settled).
/// The top row plays the role of the true function g.
class ApproxTable {
public:
    static ApproxTable checked(StagedTable t);

    int stages() const { return data_.stages; }
    int domain_bound() const { return data_.domain; }
    int stable_bound() const { return data_.stable_bound; }
    /// First stage from which every row equals the top row below stable_bound.
    int stable_from() const { return stable_from_; }
    const StagedTable& data() const { return data_; }

    std::int64_t value(int stage, int x) const;
    /// g(x), read off the top stage. Only positions below stable_bound are
    /// final; queries above it are refused.
    std::int64_t truth(int x) const;

    /// [a, b] is g-large iff b >= g(a). Requires a < b and a < stable_bound.
    Gap gap(int a, std::int64_t b) const;
    bool is_g_large(int a, std::int64_t b) const { return gap(a, b) == Gap::large; }

    /// [a, b] is g_s-small iff the stage-s value at a exceeds b.
    bool is_stage_small(int a, std::int64_t b, int stage) const;

private:
    explicit ApproxTable(StagedTable t, int stable_from)
        : data_(std::move(t)), stable_from_(stable_from) {}

    StagedTable data_;
    int stable_from_;
};

/// Turns raw approximations into a table with the invariants above by the
/// running-maximum recipe. On top of the literal jump clause, a stage bump
/// is also written at position x when a column below x jumps from <= x to
/// >= x; the finite interval classifications need this slightly earlier
/// bump, and it keeps the recipe idempotent.
/// Fails when the columns below raw.stable_bound have not settled by the
/// second-to-last stage.
ApproxTable normalize_approximations(const StagedTable& raw);

} // namespace thinset

#endif
