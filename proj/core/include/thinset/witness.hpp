#ifndef THINSET_WITNESS_HPP
#define THINSET_WITNESS_HPP

#include <optional>
#include <vector>

#include "thinset/approx_table.hpp"
#include "thinset/coloring.hpp"

namespace thinset {

/// A set H together with the colors its tuples use and the rest of the
/// palette, certifying |f[H]^n| <= bound.
struct ThinWitness {
    std::vector<int> set;
    std::vector<int> used_colors;    // sorted codes
    std::vector<int> avoided_colors; // palette complement, sorted
    int bound = 0;
};

/// Recounts the colors of every tuple of H and packages the result;
/// throws when the recount exceeds the bound.
ThinWitness make_thin_witness(const Coloring& f, const std::vector<int>& H, int bound);

/// Independent recount; false when any invariant fails.
bool verify_thin_witness(const Coloring& f, const ThinWitness& w);

/// A finite dominating function with its pointwise certificate.
struct DominationWitness {
    struct Entry {
        int i;         // input
        int64_t h;     // our value
        int64_t g;     // the truth row value it must reach
    };
    std::vector<Entry> certificate; // increasing in i
};

/// Checks h(i) >= g(i) against the table truth row for every entry.
bool verify_domination_witness(const ApproxTable& table, const DominationWitness& w);

enum class TransitiveKind { all_large, transitive_with_small };

struct TransitiveWitness {
    std::vector<int> set;
    TransitiveKind kind;
};

struct TransitivityReport {
    bool ok = true;
    int x = -1, y = -1, z = -1; // first violating triple when not ok
};

/// Literal check of the triple condition: small [x,y] and [y,z] force a
/// small [x,z].
TransitivityReport is_g_transitive(const std::vector<int>& H, const ApproxTable& table);

/// True when every adjacent interval of H is g-large.
bool all_intervals_large(const std::vector<int>& H, const ApproxTable& table);

} // namespace thinset

#endif
