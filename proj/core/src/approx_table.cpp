#include "thinset/approx_table.hpp"

#include <algorithm>

#include "thinset/errors.hpp"

namespace thinset {

namespace {

std::string cell(int s, int x) {
    return "(s=" + std::to_string(s) + ", x=" + std::to_string(x) + ")";
}

std::vector<std::string> check_shape(const StagedTable& t) {
    std::vector<std::string> issues;
    if (t.stages < 1) issues.push_back("table needs at least one stage");
    if (t.domain < 1) issues.push_back("table needs a non-empty domain");
    if (t.stable_bound < 0 || t.stable_bound > t.domain)
        issues.push_back("stable_bound must lie within [0, domain]");
    if (static_cast<int>(t.values.size()) != t.stages)
        issues.push_back("row count does not match stages");
    for (const auto& row : t.values)
        if (static_cast<int>(row.size()) != t.domain) {
            issues.push_back("row width does not match domain");
            break;
        }
    if (issues.empty())
        for (int s = 0; s < t.stages && issues.empty(); ++s)
            for (int x = 0; x < t.domain; ++x)
                if (t.values[s][x] < 0) {
                    issues.push_back("negative value at " + cell(s, x));
                    break;
                }
    return issues;
}

int settle_stage(const StagedTable& t) {
    int settled = t.stages - 1;
    while (settled > 0) {
        bool same = true;
        for (int x = 0; x < t.stable_bound && same; ++x)
            same = t.values[settled - 1][x] == t.values[t.stages - 1][x];
        if (!same) break;
        --settled;
    }
    return settled;
}

} // namespace

std::vector<std::string> check_staged_table(const StagedTable& t) {
    std::vector<std::string> issues = check_shape(t);
    if (!issues.empty()) return issues;

    for (int s = 0; s < t.stages; ++s)
        for (int x = 0; x + 1 < t.domain; ++x)
            if (t.values[s][x] >= t.values[s][x + 1]) {
                issues.push_back("row not strictly increasing at " + cell(s, x + 1));
                return issues;
            }
    for (int s = 0; s + 1 < t.stages; ++s)
        for (int x = 0; x < t.domain; ++x)
            if (t.values[s + 1][x] < t.values[s][x]) {
                issues.push_back("column decreases at " + cell(s + 1, x));
                return issues;
            }
    // Jump clause: a crossing of level x+1 at stage s+1 leaves a stage mark.
    for (int s = 0; s + 1 < t.stages; ++s)
        for (int a = 0; a < t.domain; ++a) {
            std::int64_t before = t.values[s][a];
            std::int64_t after = t.values[s + 1][a];
            if (after <= before) continue;
            for (int x = a; x + 1 < t.domain; ++x) {
                std::int64_t level = x + 1;
                if (before < level && after >= level) {
                    std::int64_t need = std::max<std::int64_t>(s + 1, level);
                    if (t.values[s + 1][x + 1] < need) {
                        issues.push_back("jump at column " + std::to_string(a) + " not propagated at " +
                                         cell(s + 1, x + 1));
                        return issues;
                    }
                }
            }
        }
    if (t.stages >= 2)
        for (int x = 0; x < t.stable_bound; ++x)
            if (t.values[t.stages - 2][x] != t.values[t.stages - 1][x]) {
                issues.push_back("column " + std::to_string(x) +
                                 " still moving at the last stage despite stable_bound");
                return issues;
            }
    return issues;
}

ApproxTable ApproxTable::checked(StagedTable t) {
    std::vector<std::string> issues = check_staged_table(t);
    if (!issues.empty()) throw InputError("approximation table rejected: " + issues.front());
    int settled = settle_stage(t);
    return ApproxTable(std::move(t), settled);
}

std::int64_t ApproxTable::value(int stage, int x) const {
    if (stage < 0 || stage >= data_.stages)
        throw InputError("stage " + std::to_string(stage) + " out of range");
    if (x < 0 || x >= data_.domain)
        throw InputError("position " + std::to_string(x) + " out of table domain");
    return data_.values[stage][x];
}

std::int64_t ApproxTable::truth(int x) const {
    if (x < 0 || x >= data_.stable_bound)
        throw InputError("truth value at " + std::to_string(x) +
                         " is not final (stable_bound = " + std::to_string(data_.stable_bound) + ")");
    return data_.values[data_.stages - 1][x];
}

Gap ApproxTable::gap(int a, std::int64_t b) const {
    if (b <= a) throw InputError("gap: interval endpoints must increase");
    return b >= truth(a) ? Gap::large : Gap::small;
}

bool ApproxTable::is_stage_small(int a, std::int64_t b, int stage) const {
    if (b <= a) throw InputError("is_stage_small: interval endpoints must increase");
    return value(stage, a) > b;
}

ApproxTable normalize_approximations(const StagedTable& raw) {
    std::vector<std::string> issues = check_shape(raw);
    if (!issues.empty()) throw InputError("normalize_approximations: " + issues.front());

    int S = raw.stages, X = raw.domain;
    StagedTable out;
    out.stages = S;
    out.domain = X;
    out.stable_bound = raw.stable_bound;
    out.values.assign(raw.values.begin(), raw.values.end());

    auto& v = out.values;
    v[0][0] = raw.values[0][0];
    for (int x = 1; x < X; ++x) v[0][x] = std::max(raw.values[0][x], v[0][x - 1] + 1);
    for (int s = 1; s < S; ++s) {
        v[s][0] = std::max(v[s - 1][0], raw.values[s][0]);
        for (int x = 1; x < X; ++x) {
            std::int64_t val = std::max({v[s][x - 1] + 1, v[s - 1][x], raw.values[s][x]});
            // Stage mark: some earlier column jumped from <= x to >= x at
            // this stage. Covers the literal clause (crossing level x) and
            // the crossing of level x+1 one position early.
            for (int a = 0; a < x; ++a) {
                if (v[s][a] > v[s - 1][a] && v[s - 1][a] <= x && v[s][a] >= x) {
                    val = std::max<std::int64_t>(val, s);
                    break;
                }
            }
            v[s][x] = val;
        }
    }

    if (S >= 2) {
        for (int x = 0; x < out.stable_bound; ++x) {
            if (v[S - 2][x] != v[S - 1][x])
                throw InputError("normalize_approximations: insufficient stages to stabilize "
                                 "(first unstable x = " + std::to_string(x) + ")");
        }
    }
    return ApproxTable::checked(std::move(out));
}

} // namespace thinset
