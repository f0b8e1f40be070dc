#ifndef THINSET_TOURNAMENT_HPP
#define THINSET_TOURNAMENT_HPP

#include <vector>

#include "thinset/approx_table.hpp"

namespace thinset {

/// A tournament on vertices 0 .. n-1; arc(u, v) holds for exactly one
/// orientation of every pair.
class Tournament {
public:
    explicit Tournament(int n);

    int size() const { return n_; }
    bool arc(int u, int v) const;
    void set_arc(int u, int v); // orients the pair {u, v} as u -> v

private:
    int n_;
    std::vector<bool> forward_; // forward_[pair] = the lower vertex wins
    int pair_index(int u, int v) const;
};

/// Orients each pair of domain points by interval size: u -> v when
/// u < v and [u, v] is g-small, v -> u when it is g-large.
Tournament tournament_from_g(const ApproxTable& table, const std::vector<int>& domain);

/// True when the vertices can be ordered with every arc pointing forward;
/// equivalently the tournament restricted to them is acyclic.
bool is_transitive(const Tournament& t, const std::vector<int>& vertices);

/// A largest transitive vertex set, lexicographically least among the
/// largest (as a sorted vector). Exact search, guarded to 24 vertices.
std::vector<int> max_transitive_subtournament(const Tournament& t);

} // namespace thinset

#endif
