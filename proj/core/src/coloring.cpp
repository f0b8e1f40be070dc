#include "thinset/coloring.hpp"

#include <algorithm>
#include <sstream>

#include "thinset/errors.hpp"

namespace thinset {

namespace {

std::string tuple_str(std::span<const int> t) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << t[i];
    }
    os << ")";
    return os.str();
}

void check_domain(const std::vector<int>& domain) {
    if (domain.empty()) throw InputError("coloring domain is empty");
    for (size_t i = 0; i < domain.size(); ++i) {
        if (domain[i] < 0) throw InputError("coloring domain has a negative element");
        if (i > 0 && domain[i] <= domain[i - 1])
            throw InputError("coloring domain is not strictly increasing");
    }
}

void check_truth_domain(const ApproxTable& table, const std::vector<int>& domain) {
    check_domain(domain);
    if (domain.back() >= table.stable_bound()) {
        std::ostringstream os;
        os << "domain point " << domain.back() << " is not below the stable bound "
           << table.stable_bound();
        throw InputError(os.str());
    }
}

} // namespace

nlohmann::json Palette::to_json() const {
    nlohmann::json colors = nlohmann::json::array();
    for (int c = 0; c < size(); ++c) colors.push_back(color_json(c));
    return {{"kind", kind()}, {"size", size()}, {"colors", colors}};
}

IntPalette::IntPalette(int k) : k_(k) {
    if (k < 1) throw InputError("palette needs at least one color");
}

nlohmann::json IntPalette::color_json(int code) const { return code; }

GapVectorPalette::GapVectorPalette(int length) : length_(length) {
    if (length < 1 || length > 20) throw InputError("gap vector length out of range");
}

std::vector<Gap> GapVectorPalette::decode(int code) const {
    std::vector<Gap> v(length_);
    for (int i = 0; i < length_; ++i)
        v[i] = (code >> (length_ - 1 - i)) & 1 ? Gap::large : Gap::small;
    return v;
}

int GapVectorPalette::encode(const std::vector<Gap>& v) const {
    int code = 0;
    for (int i = 0; i < length_; ++i)
        code = (code << 1) | (v[i] == Gap::large ? 1 : 0);
    return code;
}

nlohmann::json GapVectorPalette::color_json(int code) const {
    nlohmann::json a = nlohmann::json::array();
    for (Gap g : decode(code)) a.push_back(g == Gap::large ? "l" : "s");
    return a;
}

namespace {
// (i(x,y), i(y,z), i(x,z)) with 1 = large; a large [x,y] forces a large [x,z].
constexpr std::array<std::array<int, 3>, 5> kGap3Feasible = {{
    {0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1},
}};
} // namespace

std::array<int, 3> Gap3Palette::decode(int code) const {
    if (code < 0 || code >= 5) throw InputError("gap3 code out of range");
    return kGap3Feasible[code];
}

int Gap3Palette::encode(int xy, int yz, int xz) const {
    for (int c = 0; c < 5; ++c) {
        const auto& t = kGap3Feasible[c];
        if (t[0] == xy && t[1] == yz && t[2] == xz) return c;
    }
    return -1;
}

nlohmann::json Gap3Palette::color_json(int code) const {
    auto t = decode(code);
    return nlohmann::json::array({t[0], t[1], t[2]});
}

GraphPalette::GraphPalette(int n) : n_(n) {
    if (n < 2 || n > 10) throw InputError("graph palette size out of range");
    graphs_ = &enumerate_graphs(n);
    codes_.reserve(graphs_->size());
    for (const auto& g : *graphs_) codes_.push_back(g.code());
    // enumerate_graphs already sorts by code
}

nlohmann::json GraphPalette::color_json(int code) const {
    const LargenessGraph& g = decode(code);
    nlohmann::json edges = nlohmann::json::array();
    for (auto [i, j] : g.edges()) edges.push_back(nlohmann::json::array({i, j}));
    return {{"n", g.size()}, {"edges", edges}};
}

const LargenessGraph& GraphPalette::decode(int code) const {
    if (code < 0 || code >= size()) throw InputError("graph color code out of range");
    return (*graphs_)[code];
}

int GraphPalette::encode(const LargenessGraph& g) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), g.code());
    if (it == codes_.end() || *it != g.code()) return -1;
    return static_cast<int>(it - codes_.begin());
}

ProductPalette::ProductPalette(std::vector<std::shared_ptr<const Palette>> parts)
    : parts_(std::move(parts)) {
    if (parts_.empty()) throw InputError("product palette needs at least one component");
    long long size = 1;
    for (const auto& p : parts_) {
        size *= p->size();
        if (size > (1 << 28)) throw SizeGuardError("product palette too large");
    }
    size_ = static_cast<int>(size);
}

std::vector<int> ProductPalette::decode(int code) const {
    if (code < 0 || code >= size_) throw InputError("product color code out of range");
    std::vector<int> out(parts_.size());
    for (int i = static_cast<int>(parts_.size()) - 1; i >= 0; --i) {
        int k = parts_[i]->size();
        out[i] = code % k;
        code /= k;
    }
    return out;
}

int ProductPalette::encode(const std::vector<int>& parts) const {
    if (parts.size() != parts_.size()) throw InputError("product color has wrong arity");
    int code = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0 || parts[i] >= parts_[i]->size())
            throw InputError("product component color out of range");
        code = code * parts_[i]->size() + parts[i];
    }
    return code;
}

nlohmann::json ProductPalette::color_json(int code) const {
    nlohmann::json a = nlohmann::json::array();
    std::vector<int> parts = decode(code);
    for (size_t i = 0; i < parts.size(); ++i) a.push_back(parts_[i]->color_json(parts[i]));
    return a;
}

Coloring::Coloring(std::string kind, int arity, std::vector<int> domain,
                   std::shared_ptr<const Palette> palette, Eval eval)
    : kind_(std::move(kind)), arity_(arity), domain_(std::move(domain)),
      palette_(std::move(palette)), eval_(std::move(eval)) {
    if (arity_ < 1) throw InputError("coloring arity must be positive");
    check_domain(domain_);
    if (static_cast<size_t>(arity_) > domain_.size())
        throw InputError("coloring arity exceeds the domain size");
}

int Coloring::color_of(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != arity_)
        throw InputError("tuple arity mismatch: got " + std::to_string(tuple.size()) +
                         ", coloring expects " + std::to_string(arity_));
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0 && tuple[i] <= tuple[i - 1])
            throw InputError("tuple " + tuple_str(tuple) + " is not strictly increasing");
        if (!std::binary_search(domain_.begin(), domain_.end(), tuple[i]))
            throw InputError("tuple element " + std::to_string(tuple[i]) +
                             " is outside the coloring domain");
    }
    int c = eval_(tuple);
    if (c < 0 || c >= palette_->size())
        throw std::logic_error("coloring produced an out-of-palette code");
    return c;
}

void Coloring::for_each_tuple(const std::function<void(std::span<const int>, int)>& fn) const {
    const int n = arity_;
    const int m = static_cast<int>(domain_.size());
    if (n > m) return;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::vector<int> tuple(n);
    while (true) {
        for (int i = 0; i < n; ++i) tuple[i] = domain_[idx[i]];
        fn(tuple, color_of(tuple));
        int i = n - 1;
        while (i >= 0 && idx[i] == m - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
}

int gap_code_of(const ApproxTable& table, std::span<const int> tuple) {
    int code = 0;
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        code = (code << 1) | (table.gap(tuple[i], tuple[i + 1]) == Gap::large ? 1 : 0);
    return code;
}

LargenessGraph largeness_graph_of(const ApproxTable& table, std::span<const int> tuple) {
    const int n = static_cast<int>(tuple.size());
    LargenessGraph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.set_edge(i, i + 1, table.gap(tuple[i], tuple[i + 1]) == Gap::large);
    for (int i = 0; i + 2 < n; ++i)
        for (int j = i + 2; j < n; ++j)
            g.set_edge(i, j, table.is_stage_small(tuple[i], tuple[i + 1], tuple[j]));
    return g;
}

Coloring gap_coloring(int arity, const ApproxTable& table, std::vector<int> domain) {
    if (arity < 2) throw InputError("gap coloring needs arity at least 2");
    check_truth_domain(table, domain);
    auto shared = std::make_shared<ApproxTable>(table);
    auto palette = std::make_shared<GapVectorPalette>(arity - 1);
    auto eval = [shared](std::span<const int> t) { return gap_code_of(*shared, t); };
    return Coloring("gap", arity, std::move(domain), palette, eval);
}

Coloring largeness_coloring(int arity, const ApproxTable& table, std::vector<int> domain) {
    if (arity < 2) throw InputError("largeness coloring needs arity at least 2");
    check_truth_domain(table, domain);
    if (domain.back() >= table.stages())
        throw InputError("largeness coloring needs every domain point below the stage count");
    auto shared = std::make_shared<ApproxTable>(table);
    auto palette = std::make_shared<GraphPalette>(arity);
    auto eval = [shared, palette](std::span<const int> t) {
        LargenessGraph g = largeness_graph_of(*shared, t);
        int code = palette->encode(g);
        if (code < 0) {
            ValidationReport report = validate_graph(g);
            std::ostringstream os;
            os << "tuple " << tuple_str(t) << " yields an invalid largeness graph";
            if (!report.violations.empty()) os << ": " << report.violations.front().describe();
            throw InputError(os.str());
        }
        return code;
    };
    return Coloring("largeness", arity, std::move(domain), palette, eval);
}

Coloring gap3_coloring(const ApproxTable& table, std::vector<int> domain) {
    check_truth_domain(table, domain);
    auto shared = std::make_shared<ApproxTable>(table);
    auto palette = std::make_shared<Gap3Palette>();
    auto eval = [shared, palette](std::span<const int> t) {
        int xy = shared->gap(t[0], t[1]) == Gap::large ? 1 : 0;
        int yz = shared->gap(t[1], t[2]) == Gap::large ? 1 : 0;
        int xz = shared->gap(t[0], t[2]) == Gap::large ? 1 : 0;
        int code = palette->encode(xy, yz, xz);
        // only reachable for a non-increasing table, which the checker rejects
        if (code < 0) throw InputError("infeasible interval triple at " + tuple_str(t));
        return code;
    };
    return Coloring("gap3", 3, std::move(domain), palette, eval);
}

Coloring doubling_coloring(const Coloring& base, std::vector<int> domain) {
    if (base.arity() != 2) throw InputError("doubling needs a pair coloring");
    if (base.palette().size() != 2) throw InputError("doubling needs a two-color base");
    check_domain(domain);
    for (int x : domain)
        if (!std::binary_search(base.domain().begin(), base.domain().end(), x / 2))
            throw InputError("domain point " + std::to_string(x) +
                             " halves outside the base domain");
    auto shared = std::make_shared<Coloring>(base);
    auto palette = std::make_shared<IntPalette>(2);
    auto eval = [shared](std::span<const int> t) {
        int x1 = t[0] / 2, y1 = t[1] / 2;
        // collapsed pairs (2a, 2a+1) read the base color as 0
        int b = x1 == y1 ? 0 : shared->color_of(std::array<int, 2>{x1, y1});
        return t[0] % 2 == 0 ? b : 1 - b;
    };
    return Coloring("doubling", 2, std::move(domain), palette, eval);
}

Coloring doubling_coloring(const Coloring& base) {
    std::vector<int> domain;
    for (int x : base.domain()) {
        domain.push_back(2 * x);
        domain.push_back(2 * x + 1);
    }
    return doubling_coloring(base, std::move(domain));
}

SplitHomogeneous split_homogeneous(const std::vector<int>& H, const Coloring& doubled) {
    if (H.size() < 2) throw InputError("homogeneous split needs at least two points");
    for (size_t i = 1; i < H.size(); ++i)
        if (H[i] <= H[i - 1]) throw InputError("set is not strictly increasing");
    int color = doubled.color_of(std::array<int, 2>{H[0], H[1]});
    for (size_t i = 0; i < H.size(); ++i)
        for (size_t j = i + 1; j < H.size(); ++j)
            if (doubled.color_of(std::array<int, 2>{H[i], H[j]}) != color)
                throw InputError("set is not homogeneous for the doubled coloring");
    SplitHomogeneous out;
    out.color = color;
    for (int x : H) (x % 2 == 0 ? out.h0 : out.h1).push_back(x / 2);
    return out;
}

Coloring product_coloring(const std::vector<Coloring>& parts) {
    if (parts.empty()) throw InputError("product of zero colorings");
    for (const auto& p : parts) {
        if (p.arity() != parts.front().arity())
            throw InputError("product components disagree on arity");
        if (p.domain() != parts.front().domain())
            throw InputError("product components disagree on domain");
    }
    std::vector<std::shared_ptr<const Palette>> palettes;
    for (const auto& p : parts) palettes.push_back(p.palette_ptr());
    auto palette = std::make_shared<ProductPalette>(std::move(palettes));
    auto shared = std::make_shared<std::vector<Coloring>>(parts);
    auto eval = [shared, palette](std::span<const int> t) {
        std::vector<int> codes;
        codes.reserve(shared->size());
        for (const auto& p : *shared) codes.push_back(p.color_of(t));
        return palette->encode(codes);
    };
    return Coloring("product", parts.front().arity(), parts.front().domain(), palette, eval);
}

StagedFamily::StagedFamily(std::vector<Coloring> by_stage, int stabilization_stage)
    : by_stage_(std::move(by_stage)), stabilization_stage_(stabilization_stage) {
    if (by_stage_.empty()) throw InputError("staged family needs at least one stage");
    if (stabilization_stage_ < 0 || stabilization_stage_ >= stages())
        throw InputError("stabilization stage out of range");
    for (const auto& c : by_stage_) {
        if (c.arity() != arity() || c.domain() != domain())
            throw InputError("staged family members disagree on arity or domain");
    }
}

const Coloring& StagedFamily::at(int stage) const {
    if (stage < 0 || stage >= stages()) throw InputError("stage out of range");
    return by_stage_[stage];
}

StagedFamily gap_family(int arity, const ApproxTable& table, std::vector<int> domain) {
    if (arity < 2) throw InputError("gap family needs arity at least 2");
    check_truth_domain(table, domain);
    auto shared = std::make_shared<ApproxTable>(table);
    auto palette = std::make_shared<GapVectorPalette>(arity - 1);
    std::vector<Coloring> stages;
    for (int s = 0; s < table.stages(); ++s) {
        auto eval = [shared, s](std::span<const int> t) {
            int code = 0;
            for (size_t i = 0; i + 1 < t.size(); ++i)
                code = (code << 1) | (t[i + 1] >= shared->value(s, t[i]) ? 1 : 0);
            return code;
        };
        stages.emplace_back("gap@" + std::to_string(s), arity, domain, palette, eval);
    }
    return StagedFamily(std::move(stages), table.stable_from());
}

Coloring limit_lift(const StagedFamily& family, int extra) {
    if (extra < 0) throw InputError("negative lift arity");
    if (extra == 0) return family.limit();
    const int n = family.arity();
    const std::vector<int>& domain = family.domain();
    // a lifted tuple with every stage coordinate past stabilization must exist
    int settled = 0;
    for (int x : domain)
        if (x >= family.stabilization_stage()) ++settled;
    int below = static_cast<int>(domain.size()) - settled;
    if (settled < extra || below + settled < n + extra)
        throw InputError("domain cannot reach the stabilization stage with " +
                         std::to_string(extra) + " stage coordinates");
    auto shared = std::make_shared<StagedFamily>(family);
    auto eval = [shared, n](std::span<const int> t) {
        int stage = std::min(t[n], shared->stages() - 1);
        return shared->at(stage).color_of(t.first(n));
    };
    return Coloring("lift", n + extra, domain, family.limit().palette_ptr(), eval);
}

} // namespace thinset
