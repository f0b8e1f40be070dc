#ifndef THINSET_LARGENESS_GRAPH_HPP
#define THINSET_LARGENESS_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace thinset {

/// Stable integer encoding of a graph: one bit per unordered pair, pairs
/// taken in colexicographic order (0,1), (0,2), (1,2), (0,3), ...
/// Word 0 holds the lowest bits. Codes of equal size compare as integers.
struct GraphCode {
    int size = 0;
    std::vector<std::uint64_t> words;

    std::strong_ordering operator<=>(const GraphCode& other) const;
    bool operator==(const GraphCode& other) const { return (*this <=> other) == 0; }
    std::string hex() const;
};

/// An undirected graph on nodes {0, ..., size-1} whose edges classify the
/// intervals of an increasing tuple as large or small. Membership in the
/// axiomatised family is checked by validate_graph, not by the type itself.
class LargenessGraph {
public:
    explicit LargenessGraph(int size);
    static LargenessGraph from_edges(int size, const std::vector<std::pair<int, int>>& edges);
    static LargenessGraph from_code(const GraphCode& code);

    int size() const { return size_; }
    bool has_edge(int i, int j) const;
    void set_edge(int i, int j, bool present);
    /// Edges as (i, j) with i < j, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;
    GraphCode code() const;

    bool operator==(const LargenessGraph&) const = default;

private:
    int size_;
    std::vector<bool> bits_; // colex pair order

    static int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }
    void check_pair(int i, int j) const;
};

enum class Axiom { a, b, c, d };

struct AxiomViolation {
    Axiom axiom;
    int i;
    int j;
    int k; // -1 unless the axiom mentions a third node
    std::string describe() const;
};

struct ValidationReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the four structural axioms and reports every violation.
ValidationReport validate_graph(const LargenessGraph& g);
bool is_valid(const LargenessGraph& g);

/// No edge {i, i+1} for i < size-2. The last adjacent slot is unconstrained.
bool is_packed(const LargenessGraph& g);
/// Edge {size-2, size-1} present. Sizes below 2 are never normal.
bool is_normal(const LargenessGraph& g);
/// No adjacent edge at all; such graphs are the pack fixed points and there
/// is exactly one per equivalence class.
bool is_adjacent_free(const LargenessGraph& g);

/// Agreement on every non-adjacent pair (i, j) with i+1 < j.
bool equivalent(const LargenessGraph& g0, const LargenessGraph& g1);

/// Removes every adjacent edge. Keeps the graph valid and equivalent.
LargenessGraph pack(const LargenessGraph& g);

/// Adds adjacent edges until the graph is normal, following the progress
/// rule: repeatedly insert {l, l+1} for the least l < size-2 with neither
/// {l, l+1} nor {l, size-1} present, then insert {size-2, size-1}.
LargenessGraph normalize(const LargenessGraph& g);

/// Drops the last node of a normal graph.
LargenessGraph restrict_graph(const LargenessGraph& g);

/// Adds a node size, the edge {size-1, size}, and the forced edges
/// {i, size} for each i < size-1 with {i, i+1} absent. Inverse of
/// restrict_graph on normal graphs.
LargenessGraph extend_graph(const LargenessGraph& g);

enum class EnumMethod { filter, recursive };

/// All valid graphs of the given size in canonical (code ascending) order.
/// The filter method tries every bitmask and is capped at size 7; the
/// recursive method composes an adjacent-free prefix, a forced cross block
/// and an arbitrary suffix around the least adjacent edge.
const std::vector<LargenessGraph>& enumerate_graphs(int n, EnumMethod method = EnumMethod::recursive);

/// All adjacent-free graphs of the given size, canonical order.
std::vector<LargenessGraph> enumerate_adjacent_free(int n);

struct GraphClass {
    LargenessGraph packed_rep; // the adjacent-free member
    LargenessGraph normal_rep;
    std::vector<LargenessGraph> members;
};

/// Equivalence classes over enumerate_graphs(n), ordered by packed
/// representative code.
std::vector<GraphClass> graph_classes(int n);

} // namespace thinset

#endif
