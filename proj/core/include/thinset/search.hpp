#ifndef THINSET_SEARCH_HPP
#define THINSET_SEARCH_HPP

#include <optional>

#include "thinset/coloring.hpp"
#include "thinset/witness.hpp"

namespace thinset {

/// Limits for the exact searches; zero means unlimited. With more than
/// one worker the root branches are searched in parallel, but the result
/// is the same lexicographically least witness.
struct SearchBudget {
    long long max_nodes = 0;
    double max_seconds = 0.0;
    int workers = 1;
};

/// Lexicographically least size-m subset H of the domain with
/// |f[H]^n| <= ell, or nothing when no such subset exists. Depth-first
/// over increasing extensions, pruning once the running color set
/// exceeds ell.
std::optional<ThinWitness> find_thin_set(const Coloring& f, int ell, int m,
                                         const SearchBudget& budget = {});

/// Exhaustive reference implementation: walks all m-subsets in
/// lexicographic order and recounts colors from scratch.
std::optional<ThinWitness> brute_thin_oracle(const Coloring& f, int ell, int m);

/// Least N such that every k-coloring of the n-tuples of {0..N-1} admits
/// a size-m subset using at most ell colors. Counterexample search over
/// colorings canonical under color renaming (first-occurrence order).
int extremal_number(int n, int k, int ell, int m, const SearchBudget& budget = {});

} // namespace thinset

#endif
