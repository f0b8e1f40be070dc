#ifndef THINSET_COLORING_HPP
#define THINSET_COLORING_HPP

#include <array>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "thinset/approx_table.hpp"
#include "thinset/largeness_graph.hpp"

namespace thinset {

/// Bijective codec between the structured colors of one coloring and the
/// integer codes 0 .. size()-1 used for storage and search.
class Palette {
public:
    virtual ~Palette() = default;
    virtual int size() const = 0;
    virtual std::string kind() const = 0;
    /// Structured form of one code, for the codec table.
    virtual nlohmann::json color_json(int code) const = 0;
    nlohmann::json to_json() const;
};

/// Plain colors 0 .. k-1.
class IntPalette : public Palette {
public:
    explicit IntPalette(int k);
    int size() const override { return k_; }
    std::string kind() const override { return "int"; }
    nlohmann::json color_json(int code) const override;

private:
    int k_;
};

/// Vectors over {small, large} of a fixed length; the first coordinate is
/// the most significant bit of the code, so codes sort lexicographically.
class GapVectorPalette : public Palette {
public:
    explicit GapVectorPalette(int length);
    int length() const { return length_; }
    int size() const override { return 1 << length_; }
    std::string kind() const override { return "gap-vector"; }
    nlohmann::json color_json(int code) const override;
    std::vector<Gap> decode(int code) const;
    int encode(const std::vector<Gap>& v) const;

private:
    int length_;
};

/// The five feasible triples (i(x,y), i(y,z), i(x,z)); a large opening
/// interval forces a large closing one, which rules out 100, 010 and 110.
class Gap3Palette : public Palette {
public:
    int size() const override { return 5; }
    std::string kind() const override { return "gap3"; }
    nlohmann::json color_json(int code) const override;
    std::array<int, 3> decode(int code) const;
    /// -1 when the triple is infeasible.
    int encode(int xy, int yz, int xz) const;
};

/// All valid largeness graphs of one size in canonical order.
class GraphPalette : public Palette {
public:
    explicit GraphPalette(int n);
    int graph_size() const { return n_; }
    int size() const override { return static_cast<int>(graphs_->size()); }
    std::string kind() const override { return "largeness"; }
    nlohmann::json color_json(int code) const override;
    const LargenessGraph& decode(int code) const;
    /// -1 when the graph is not in the palette (i.e. not valid).
    int encode(const LargenessGraph& g) const;

private:
    int n_;
    const std::vector<LargenessGraph>* graphs_; // owned by the enumeration cache
    std::vector<GraphCode> codes_;              // sorted, position = color code
};

/// Tuples of component colors, mixed-radix encoded with the first
/// component most significant.
class ProductPalette : public Palette {
public:
    explicit ProductPalette(std::vector<std::shared_ptr<const Palette>> parts);
    int size() const override { return size_; }
    std::string kind() const override { return "product"; }
    nlohmann::json color_json(int code) const override;
    std::vector<int> decode(int code) const;
    int encode(const std::vector<int>& parts) const;
    int arity() const { return static_cast<int>(parts_.size()); }

private:
    std::vector<std::shared_ptr<const Palette>> parts_;
    int size_;
};

/// A total map from increasing tuples over a finite domain to palette
/// codes. Evaluation is pure, so colorings can be shared across threads.
class Coloring {
public:
    using Eval = std::function<int(std::span<const int>)>;

    Coloring(std::string kind, int arity, std::vector<int> domain,
             std::shared_ptr<const Palette> palette, Eval eval);

    const std::string& kind() const { return kind_; }
    int arity() const { return arity_; }
    const std::vector<int>& domain() const { return domain_; }
    const Palette& palette() const { return *palette_; }
    std::shared_ptr<const Palette> palette_ptr() const { return palette_; }

    int color_of(std::span<const int> tuple) const;

    /// Visits every increasing tuple in lexicographic order.
    void for_each_tuple(const std::function<void(std::span<const int>, int)>& fn) const;

private:
    std::string kind_;
    int arity_;
    std::vector<int> domain_;
    std::shared_ptr<const Palette> palette_;
    Eval eval_;
};

/// Gap-vector code of one tuple: bit per adjacent interval, first
/// interval most significant, 1 = large.
int gap_code_of(const ApproxTable& table, std::span<const int> tuple);

/// Largeness graph of one tuple: adjacent edges from truth, non-adjacent
/// edges {i,j} from smallness at stage x_j.
LargenessGraph largeness_graph_of(const ApproxTable& table, std::span<const int> tuple);

/// f(x_0, ..., x_{n-1}) = the vector of interval classifications
/// (gap(x_0, x_1), ..., gap(x_{n-2}, x_{n-1})).
Coloring gap_coloring(int arity, const ApproxTable& table, std::vector<int> domain);

/// f(x_0, ..., x_{n-1}) = the largeness graph with an adjacent edge
/// {i, i+1} when [x_i, x_{i+1}] is g-large and a non-adjacent edge {i, j}
/// when [x_i, x_{i+1}] is still g_{x_j}-small. Every emitted graph is
/// validated; a violation means the table is defective and raises an
/// input error.
Coloring largeness_coloring(int arity, const ApproxTable& table, std::vector<int> domain);

/// The five-color triple coloring (i(x,y), i(y,z), i(x,z)).
Coloring gap3_coloring(const ApproxTable& table, std::vector<int> domain);

/// f(x, y) reads the base color of (floor(x/2), floor(y/2)) and flips it
/// when x is odd. Pairs that collapse onto the same base point read the
/// base color as 0.
Coloring doubling_coloring(const Coloring& base, std::vector<int> domain);
Coloring doubling_coloring(const Coloring& base);

struct SplitHomogeneous {
    std::vector<int> h0; // halves of the even members, base color = color
    std::vector<int> h1; // halves of the odd members, base color = 1 - color
    int color;           // the color H is homogeneous for
};

/// Splits a doubling-homogeneous set by parity: the even members' halves
/// carry the same base color, the odd members' halves the complementary
/// one. Throws when H is not homogeneous.
SplitHomogeneous split_homogeneous(const std::vector<int>& H, const Coloring& doubled);

/// Componentwise product of colorings over one domain and arity.
Coloring product_coloring(const std::vector<Coloring>& parts);

/// A stage-indexed family of colorings with a recorded stage from which
/// every member equals the last one.
class StagedFamily {
public:
    StagedFamily(std::vector<Coloring> by_stage, int stabilization_stage);

    int stages() const { return static_cast<int>(by_stage_.size()); }
    int arity() const { return by_stage_.front().arity(); }
    const std::vector<int>& domain() const { return by_stage_.front().domain(); }
    int stabilization_stage() const { return stabilization_stage_; }
    const Coloring& at(int stage) const;
    const Coloring& limit() const { return by_stage_.back(); }

private:
    std::vector<Coloring> by_stage_;
    int stabilization_stage_;
};

/// The gap coloring evaluated against each stage row in turn; stabilizes
/// at the table's settling stage.
StagedFamily gap_family(int arity, const ApproxTable& table, std::vector<int> domain);

/// Absorbs the stage index into extra trailing coordinates: the lifted
/// coloring reads its first arity() coordinates as the tuple and the next
/// coordinate as the stage (clamped to the last one). With extra == 0 the
/// limit coloring itself is returned. Once every stage coordinate passes
/// the stabilization stage the lift agrees with the limit.
Coloring limit_lift(const StagedFamily& family, int extra);

} // namespace thinset

#endif
