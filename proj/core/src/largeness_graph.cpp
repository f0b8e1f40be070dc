#include "thinset/largeness_graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <string>

#include "thinset/errors.hpp"

namespace thinset {

std::strong_ordering GraphCode::operator<=>(const GraphCode& other) const {
    if (auto c = size <=> other.size; c != 0) return c;
    std::size_t n = std::max(words.size(), other.words.size());
    for (std::size_t w = n; w-- > 0;) {
        std::uint64_t a = w < words.size() ? words[w] : 0;
        std::uint64_t b = w < other.words.size() ? other.words[w] : 0;
        if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string GraphCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    bool leading = true;
    for (std::size_t w = words.size(); w-- > 0;) {
        for (int shift = 60; shift >= 0; shift -= 4) {
            int d = static_cast<int>((words[w] >> shift) & 0xf);
            if (leading && d == 0) continue;
            leading = false;
            out.push_back(digits[d]);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

LargenessGraph::LargenessGraph(int size) : size_(size) {
    if (size < 0) throw InputError("graph size must be non-negative");
    bits_.assign(static_cast<std::size_t>(size) * (size - 1) / 2, false);
}

void LargenessGraph::check_pair(int i, int j) const {
    if (i < 0 || j <= i || j >= size_)
        throw InputError("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") out of range for size " + std::to_string(size_));
}

LargenessGraph LargenessGraph::from_edges(int size, const std::vector<std::pair<int, int>>& edges) {
    LargenessGraph g(size);
    for (auto [i, j] : edges) {
        if (i > j) std::swap(i, j);
        g.check_pair(i, j);
        g.bits_[static_cast<std::size_t>(pair_index(i, j))] = true;
    }
    return g;
}

LargenessGraph LargenessGraph::from_code(const GraphCode& code) {
    LargenessGraph g(code.size);
    std::size_t nbits = g.bits_.size();
    for (std::size_t b = 0; b < nbits; ++b) {
        std::size_t w = b / 64;
        if (w < code.words.size() && (code.words[w] >> (b % 64)) & 1) g.bits_[b] = true;
    }
    return g;
}

bool LargenessGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    check_pair(i, j);
    return bits_[static_cast<std::size_t>(pair_index(i, j))];
}

void LargenessGraph::set_edge(int i, int j, bool present) {
    if (i > j) std::swap(i, j);
    check_pair(i, j);
    bits_[static_cast<std::size_t>(pair_index(i, j))] = present;
}

std::vector<std::pair<int, int>> LargenessGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size_; ++i)
        for (int j = i + 1; j < size_; ++j)
            if (bits_[static_cast<std::size_t>(pair_index(i, j))]) out.emplace_back(i, j);
    return out;
}

GraphCode LargenessGraph::code() const {
    GraphCode c;
    c.size = size_;
    c.words.assign((bits_.size() + 63) / 64, 0);
    for (std::size_t b = 0; b < bits_.size(); ++b)
        if (bits_[b]) c.words[b / 64] |= std::uint64_t(1) << (b % 64);
    return c;
}

std::string AxiomViolation::describe() const {
    std::string name(1, "abcd"[static_cast<int>(axiom)]);
    std::string out = "axiom (" + name + ") at (i=" + std::to_string(i) + ", j=" + std::to_string(j);
    if (k >= 0) out += ", k=" + std::to_string(k);
    return out + ")";
}

ValidationReport validate_graph(const LargenessGraph& g) {
    ValidationReport report;
    int n = g.size();
    // (a) an adjacent edge at i rules out every longer edge from i.
    for (int i = 0; i + 1 < n; ++i) {
        if (!g.has_edge(i, i + 1)) continue;
        for (int j = i + 2; j < n; ++j)
            if (g.has_edge(i, j)) report.violations.push_back({Axiom::a, i, j, -1});
    }
    // (b) a missing adjacent edge below a present one forces a skip edge.
    for (int i = 0; i + 1 < n; ++i)
        for (int j = i + 1; j + 1 < n; ++j)
            if (!g.has_edge(i, i + 1) && g.has_edge(j, j + 1) && !g.has_edge(i, j + 1))
                report.violations.push_back({Axiom::b, i, j, -1});
    // (c) non-adjacent edges extend to the right, short of the last node.
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j + 1 < n; ++j)
            if (g.has_edge(i, j) && !g.has_edge(i, j + 1))
                report.violations.push_back({Axiom::c, i, j, -1});
    // (d) a gap before a non-adjacent edge forces an edge from j-1.
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (!g.has_edge(i, j) && g.has_edge(i, k) && !g.has_edge(j - 1, k))
                    report.violations.push_back({Axiom::d, i, j, k});
    return report;
}

bool is_valid(const LargenessGraph& g) { return validate_graph(g).ok(); }

bool is_packed(const LargenessGraph& g) {
    for (int i = 0; i + 2 < g.size(); ++i)
        if (g.has_edge(i, i + 1)) return false;
    return true;
}

bool is_normal(const LargenessGraph& g) {
    return g.size() >= 2 && g.has_edge(g.size() - 2, g.size() - 1);
}

bool is_adjacent_free(const LargenessGraph& g) {
    for (int i = 0; i + 1 < g.size(); ++i)
        if (g.has_edge(i, i + 1)) return false;
    return true;
}

bool equivalent(const LargenessGraph& g0, const LargenessGraph& g1) {
    if (g0.size() != g1.size()) throw InputError("equivalent: size mismatch");
    int n = g0.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (g0.has_edge(i, j) != g1.has_edge(i, j)) return false;
    return true;
}

LargenessGraph pack(const LargenessGraph& g) {
    LargenessGraph out = g;
    for (int i = 0; i + 1 < g.size(); ++i) out.set_edge(i, i + 1, false);
    return out;
}

LargenessGraph normalize(const LargenessGraph& g) {
    int n = g.size();
    if (n < 2) throw InputError("normalize: size must be at least 2");
    LargenessGraph out = g;
    for (;;) {
        int chosen = -1;
        for (int l = 0; l + 2 < n; ++l) {
            if (!out.has_edge(l, l + 1) && !out.has_edge(l, n - 1)) {
                chosen = l;
                break;
            }
        }
        if (chosen < 0) break;
        out.set_edge(chosen, chosen + 1, true);
    }
    out.set_edge(n - 2, n - 1, true);
    return out;
}

LargenessGraph restrict_graph(const LargenessGraph& g) {
    if (!is_normal(g)) throw InputError("restrict_graph: input must be normal");
    int n = g.size();
    LargenessGraph out(n - 1);
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) out.set_edge(i, j, g.has_edge(i, j));
    return out;
}

LargenessGraph extend_graph(const LargenessGraph& g) {
    int n = g.size() + 1;
    if (n < 2) throw InputError("extend_graph: input must have at least one node");
    LargenessGraph out(n);
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) out.set_edge(i, j, g.has_edge(i, j));
    out.set_edge(n - 2, n - 1, true);
    for (int i = 0; i + 2 < n; ++i)
        if (!g.has_edge(i, i + 1)) out.set_edge(i, n - 1, true);
    return out;
}

namespace {

constexpr int kFilterCap = 7;
constexpr int kRecursiveCap = 14;

std::vector<LargenessGraph> enumerate_filter(int n) {
    if (n > kFilterCap)
        throw SizeGuardError("enumerate_graphs: filter method capped at size " + std::to_string(kFilterCap));
    int nbits = n * (n - 1) / 2;
    std::vector<LargenessGraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nbits); ++mask) {
        GraphCode code{n, {mask}};
        LargenessGraph g = LargenessGraph::from_code(code);
        if (is_valid(g)) out.push_back(std::move(g));
    }
    return out;
}

using GraphCache = std::map<int, std::vector<LargenessGraph>>;

std::vector<LargenessGraph> adjacent_free_from(const GraphCache& cache, int n) {
    std::vector<LargenessGraph> pool;
    if (n <= 1) {
        pool.emplace_back(n);
    } else {
        for (const LargenessGraph& g : cache.at(n - 1)) pool.push_back(pack(extend_graph(g)));
    }
    return pool;
}

// Split on the least adjacent edge {i, i+1}; i == n-1 stands for a graph
// with no adjacent edge at all. The prefix on {0..i} is adjacent-free, the
// suffix on {i+1..n-1} is arbitrary, and every cross pair {a, b} with
// a < i <= i+1 <= b is an edge while {i, b} for b > i+1 is not.
std::vector<LargenessGraph> build_recursive(const GraphCache& cache, int n) {
    std::vector<LargenessGraph> out;
    if (n == 0) {
        out.emplace_back(0);
        return out;
    }
    for (int i = 0; i < n; ++i) {
        std::vector<LargenessGraph> prefixes = adjacent_free_from(cache, i + 1);
        const std::vector<LargenessGraph>& suffixes = cache.at(n - 1 - i);
        for (const LargenessGraph& p : prefixes) {
            for (const LargenessGraph& q : suffixes) {
                LargenessGraph g(n);
                for (int a = 0; a <= i; ++a)
                    for (int b = a + 1; b <= i; ++b) g.set_edge(a, b, p.has_edge(a, b));
                for (int a = i + 1; a < n; ++a)
                    for (int b = a + 1; b < n; ++b) g.set_edge(a, b, q.has_edge(a - i - 1, b - i - 1));
                if (i + 1 < n) {
                    g.set_edge(i, i + 1, true);
                    for (int a = 0; a < i; ++a)
                        for (int b = i + 1; b < n; ++b) g.set_edge(a, b, true);
                }
                assert(n > 8 || is_valid(g));
                out.push_back(std::move(g));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const LargenessGraph& x, const LargenessGraph& y) { return x.code() < y.code(); });
    return out;
}

const std::vector<LargenessGraph>& enumerate_recursive(int n) {
    static GraphCache cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    for (int k = 0; k <= n; ++k)
        if (!cache.count(k)) cache.emplace(k, build_recursive(cache, k));
    return cache.at(n);
}

} // namespace

const std::vector<LargenessGraph>& enumerate_graphs(int n, EnumMethod method) {
    if (n < 0) throw InputError("enumerate_graphs: negative size");
    if (n > kRecursiveCap)
        throw SizeGuardError("enumerate_graphs: size capped at " + std::to_string(kRecursiveCap));
    if (method == EnumMethod::filter) {
        static std::map<int, std::vector<LargenessGraph>> cache;
        static std::mutex mutex;
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, enumerate_filter(n)).first;
        return it->second;
    }
    return enumerate_recursive(n);
}

std::vector<LargenessGraph> enumerate_adjacent_free(int n) {
    std::vector<LargenessGraph> pool;
    for (const LargenessGraph& g : enumerate_graphs(n))
        if (is_adjacent_free(g)) pool.push_back(g);
    return pool;
}

std::vector<GraphClass> graph_classes(int n) {
    if (n < 2) throw InputError("graph_classes: size must be at least 2");
    const std::vector<LargenessGraph>& all = enumerate_graphs(n);
    std::map<GraphCode, GraphClass> classes;
    for (const LargenessGraph& g : all) {
        LargenessGraph rep = pack(g);
        auto it = classes.find(rep.code());
        if (it == classes.end())
            it = classes.emplace(rep.code(), GraphClass{rep, normalize(rep), {}}).first;
        it->second.members.push_back(g);
    }
    std::vector<GraphClass> out;
    out.reserve(classes.size());
    for (auto& [code, cls] : classes) out.push_back(std::move(cls));
    return out;
}

} // namespace thinset
