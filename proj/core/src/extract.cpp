#include "thinset/extract.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "thinset/coloring.hpp"
#include "thinset/errors.hpp"

namespace thinset {

namespace {

double binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    double c = 1;
    for (int i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
    return c;
}

void check_set(const std::vector<int>& H, const ApproxTable& table) {
    if (H.empty()) throw InputError("witness set is empty");
    for (size_t i = 0; i < H.size(); ++i) {
        if (H[i] < 0) throw InputError("witness set has a negative element");
        if (i > 0 && H[i] <= H[i - 1])
            throw InputError("witness set is not strictly increasing");
    }
    if (H.back() >= table.stable_bound())
        throw InputError("witness set reaches past the stable bound");
}

/// Visits the r-subsets of pool in lexicographic order; stops at the
/// first one pred accepts and copies it to out.
template <class Pred>
bool first_combination(const std::vector<int>& pool, int r, Pred&& pred,
                       std::vector<int>& out) {
    const int m = static_cast<int>(pool.size());
    if (r < 1 || r > m) return false;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::vector<int> tuple(r);
    while (true) {
        for (int i = 0; i < r; ++i) tuple[i] = pool[idx[i]];
        if (pred(tuple)) {
            out = tuple;
            return true;
        }
        int i = r - 1;
        while (i >= 0 && idx[i] == m - r + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

template <class Fn>
void each_combination(const std::vector<int>& pool, int r, Fn&& fn) {
    std::vector<int> out;
    first_combination(
        pool, r,
        [&](const std::vector<int>& t) {
            fn(t);
            return false;
        },
        out);
}

std::vector<int> tail_above(const std::vector<int>& H, int64_t t) {
    std::vector<int> out;
    for (int y : H)
        if (y > t) out.push_back(y);
    return out;
}

DominationWitness finish_witness(const ApproxTable& table, DominationWitness w) {
    if (!verify_domination_witness(table, w))
        throw std::logic_error("extracted certificate fails pointwise verification");
    return w;
}

// ---- five-color triple extraction ----------------------------------

constexpr int kTripleAllSmall = 0;   // <0,0,0>
constexpr int kTripleTransitive = 1; // <0,0,1>
constexpr int kTripleNoSmallLarge = 2; // <0,1,1>
constexpr int kTripleLargeSmall = 3; // <1,0,1>
constexpr int kTripleAllLarge = 4;   // <1,1,1>

} // namespace

TransitiveWitness extract_transitive(const ThinWitness& w, const ApproxTable& table) {
    const std::vector<int>& H = w.set;
    check_set(H, table);
    if (H.size() < 4) throw InputError("need at least four elements to extract");
    if (binom(static_cast<int>(H.size()), 3) > 2e6)
        throw SizeGuardError("witness set too large for the triple recount");

    Gap3Palette palette;
    std::set<int> realized;
    each_combination(H, 3, [&](const std::vector<int>& t) {
        int xy = table.gap(t[0], t[1]) == Gap::large ? 1 : 0;
        int yz = table.gap(t[1], t[2]) == Gap::large ? 1 : 0;
        int xz = table.gap(t[0], t[2]) == Gap::large ? 1 : 0;
        int code = palette.encode(xy, yz, xz);
        if (code < 0) throw InputError("infeasible triple color; table is defective");
        realized.insert(code);
    });
    std::vector<int> avoided;
    for (int c = 0; c < 5; ++c)
        if (!realized.count(c)) avoided.push_back(c);
    if (avoided.empty()) throw InputError("every feasible triple color occurs on the set");

    const size_t bound = (H.size() - 2) / 2;
    std::vector<std::string> reasons;
    auto finish = [&](std::vector<int> G, TransitiveKind kind) {
        auto rep = is_g_transitive(G, table);
        if (!rep.ok) throw std::logic_error("extracted set fails the transitivity recheck");
        return TransitiveWitness{std::move(G), kind};
    };
    // cases ordered by the size and strength of what they return
    for (int c : {kTripleNoSmallLarge, kTripleTransitive, kTripleAllSmall, kTripleLargeSmall,
                  kTripleAllLarge}) {
        if (!std::count(avoided.begin(), avoided.end(), c)) continue;
        switch (c) {
        case kTripleNoSmallLarge:
            // avoided <0,1,1>: in the infinite case H has no small interval
            if (all_intervals_large(H, table)) return finish(H, TransitiveKind::all_large);
            reasons.push_back("<0,1,1> avoided but a small interval has no far witness");
            break;
        case kTripleTransitive:
            // avoided <0,0,1> says exactly that H is g-transitive
            return finish(H, TransitiveKind::transitive_with_small);
        case kTripleAllSmall: {
            // avoided <0,0,0>: the even-indexed subsequence has large gaps
            std::vector<int> G;
            for (size_t i = 0; i < H.size(); i += 2) G.push_back(H[i]);
            if (!all_intervals_large(G, table))
                throw std::logic_error("even subsequence has a small interval despite "
                                       "<0,0,0> being avoided");
            return finish(G, TransitiveKind::all_large);
        }
        case kTripleLargeSmall: {
            // avoided <1,0,1>: everything past a large pair is large
            int yi = -1;
            for (size_t j = 1; j < H.size() && yi < 0; ++j)
                for (size_t i = 0; i < j; ++i)
                    if (table.gap(H[i], H[j]) == Gap::large) {
                        yi = static_cast<int>(j);
                        break;
                    }
            if (yi < 0) {
                reasons.push_back("<1,0,1> avoided but the set has no g-large pair");
                break;
            }
            std::vector<int> G(H.begin() + yi + 1, H.end());
            if (!all_intervals_large(G, table))
                throw std::logic_error("tail past a large pair has a small interval "
                                       "despite <1,0,1> being avoided");
            if (G.size() < bound) {
                std::ostringstream os;
                os << "<1,0,1> tail above " << H[yi] << " keeps only " << G.size()
                   << " of " << H.size() << " elements";
                reasons.push_back(os.str());
                break;
            }
            return finish(std::move(G), TransitiveKind::all_large);
        }
        case kTripleAllLarge:
            reasons.push_back("only <1,1,1> is avoided, which the infinite argument "
                              "rules out and the finite set cannot use");
            break;
        }
    }
    std::string msg = "no extraction case applies";
    for (const auto& r : reasons) msg += "; " + r;
    throw InsufficientDataError(msg);
}

// ---- gap-vector domination extraction ------------------------------

namespace {

std::optional<std::vector<int>> find_gap_realizer(const std::vector<int>& pool, int arity,
                                                  int code, const ApproxTable& table) {
    std::vector<int> out;
    if (arity == 1) {
        // the empty vector is the only arity-1 color
        if (pool.empty()) return std::nullopt;
        return std::vector<int>{pool.front()};
    }
    if (first_combination(
            pool, arity,
            [&](const std::vector<int>& t) { return gap_code_of(table, t) == code; }, out))
        return out;
    return std::nullopt;
}

DominationWitness gap_rec(const std::vector<int>& H, const ApproxTable& table, int arity,
                          int avoided) {
    if (arity <= 1)
        throw InsufficientDataError("recursion reached arity 1, whose single color "
                                    "only the empty set avoids");
    if (avoided == 0) {
        // all-small avoided: every arity-tuple spans a g-large interval,
        // so the (i + arity)-th element clears g(i)
        int count = static_cast<int>(H.size()) - arity;
        if (count <= 0)
            throw InsufficientDataError(
                "all-small case needs more than " + std::to_string(arity) +
                " elements, have " + std::to_string(H.size()));
        DominationWitness w;
        for (int i = 0; i < count && i < table.stable_bound(); ++i)
            w.certificate.push_back({i, H[i + arity], table.truth(i)});
        if (w.certificate.empty())
            throw InsufficientDataError("all-small case has no inputs below the stable bound");
        return finish_witness(table, std::move(w));
    }

    // p = rightmost large coordinate; everything after it is small
    int p = -1;
    for (int q = arity - 2; q >= 0 && p < 0; --q)
        if ((avoided >> (arity - 2 - q)) & 1) p = q;
    int prefix = avoided >> (arity - 1 - p);

    auto realizer = find_gap_realizer(H, p + 1, prefix, table);
    if (!realizer) return gap_rec(H, table, p + 1, prefix); // prefix color avoided too

    int xp = realizer->back();
    int64_t t = std::max<int64_t>(xp + 1, table.truth(xp));
    std::vector<int> tail = tail_above(H, t);
    int arity2 = arity - p - 1;
    if (arity2 == 1) {
        // a lone element past t would close the avoided color itself
        if (!tail.empty())
            throw std::logic_error("element past the large threshold realizes the "
                                   "avoided color");
        throw InsufficientDataError(
            "avoided color ends in its only large coordinate; no element may lie "
            "past t = " + std::to_string(t) + " and none does, leaving nothing to read");
    }
    // every arity2-tuple of the tail spans a g-large interval
    int count = static_cast<int>(tail.size()) - arity2;
    if (count <= 0)
        throw InsufficientDataError(
            "tail past t = " + std::to_string(t) + " keeps " + std::to_string(tail.size()) +
            " elements, not enough for the shifted all-small reading");
    DominationWitness w;
    for (int i = 0; i < count && i < table.stable_bound(); ++i)
        w.certificate.push_back({i, tail[i + arity2], table.truth(i)});
    if (w.certificate.empty())
        throw InsufficientDataError("shifted case has no inputs below the stable bound");
    return finish_witness(table, std::move(w));
}

} // namespace

DominationWitness extract_dominator_gap(const ThinWitness& w, const ApproxTable& table, int n) {
    if (n <= 1)
        throw InputError("the arity-1 gap coloring has one color and no thin sets");
    const std::vector<int>& H = w.set;
    check_set(H, table);
    if (binom(static_cast<int>(H.size()), n) > 2e6)
        throw SizeGuardError("witness set too large for the color recount");

    std::set<int> realized;
    each_combination(H, n, [&](const std::vector<int>& t) {
        realized.insert(gap_code_of(table, t));
    });
    int avoided = -1;
    for (int c = 0; c < (1 << (n - 1)) && avoided < 0; ++c)
        if (!realized.count(c)) avoided = c;
    if (avoided < 0) throw InputError("every gap color occurs on the set");
    return gap_rec(H, table, n, avoided);
}

// ---- largeness-graph domination extraction -------------------------

namespace {

LargenessGraph induced_initial(const LargenessGraph& g, int size) {
    LargenessGraph out(size);
    for (int j = 1; j < size; ++j)
        for (int i = 0; i < j; ++i) out.set_edge(i, j, g.has_edge(i, j));
    return out;
}

LargenessGraph induced_final(const LargenessGraph& g, int from) {
    LargenessGraph out(g.size() - from);
    for (int j = from + 1; j < g.size(); ++j)
        for (int i = from; i < j; ++i) out.set_edge(i - from, j - from, g.has_edge(i, j));
    return out;
}

std::optional<std::vector<int>> find_graph_realizer(const std::vector<int>& pool, int arity,
                                                    const LargenessGraph& want,
                                                    const ApproxTable& table) {
    std::vector<int> out;
    if (arity == 1) {
        if (pool.empty()) return std::nullopt;
        return std::vector<int>{pool.front()};
    }
    if (first_combination(
            pool, arity,
            [&](const std::vector<int>& t) {
                return largeness_graph_of(table, t).code() == want.code();
            },
            out))
        return out;
    return std::nullopt;
}

DominationWitness largeness_rec(const std::vector<int>& H, const ApproxTable& table,
                                int arity, const LargenessGraph& gamma) {
    if (arity <= 1)
        throw InsufficientDataError("recursion reached arity 1, whose single color "
                                    "only the empty set avoids");
    if (!is_valid(gamma)) throw std::logic_error("recursion target is not a valid graph");

    int adj = -1;
    for (int i = 0; i + 1 < arity && adj < 0; ++i)
        if (gamma.has_edge(i, i + 1)) adj = i;

    if (adj >= 0) {
        // an adjacent edge splits the avoided graph into a prefix and a
        // suffix; an unrealized side carries the avoidance down
        LargenessGraph prefix = induced_initial(gamma, adj + 1);
        auto head = find_graph_realizer(H, adj + 1, prefix, table);
        if (!head) return largeness_rec(H, table, adj + 1, prefix);

        int xi = head->back();
        int64_t t = std::max<int64_t>(xi + 1, table.truth(xi));
        std::vector<int> tail = tail_above(H, t);
        LargenessGraph suffix = induced_final(gamma, adj + 1);
        auto rest = find_graph_realizer(tail, arity - adj - 1, suffix, table);
        if (!rest) return largeness_rec(tail, table, arity - adj - 1, suffix);
        throw InsufficientDataError(
            "avoided graph with adjacent edge {" + std::to_string(adj) + "," +
            std::to_string(adj + 1) + "}: prefix and suffix are both realized, so the "
            "finite stages do not separate the class");
    }

    // adjacent-free target: enumerate same-class tuples; avoidance forces
    // a g-large adjacent interval into each, which h reads off
    auto in_class = [&](const std::vector<int>& t) {
        for (int i = 0; i + 2 < arity; ++i)
            for (int j = i + 2; j < arity; ++j)
                if (table.is_stage_small(t[i], t[i + 1], t[j]) != gamma.has_edge(i, j))
                    return false;
        return true;
    };
    DominationWitness w;
    int64_t failed_at = -1;
    for (int64_t t = 0; t <= H.back(); ++t) {
        std::vector<int> pool = tail_above(H, t);
        std::vector<int> tuple;
        if (!first_combination(pool, arity, in_class, tuple)) {
            failed_at = t;
            break;
        }
        bool has_large = false;
        for (int i = 0; i + 1 < arity && !has_large; ++i)
            has_large = table.gap(tuple[i], tuple[i + 1]) == Gap::large;
        if (!has_large)
            throw std::logic_error("same-class tuple with all intervals small "
                                   "realizes the avoided graph");
        if (t < table.stable_bound())
            w.certificate.push_back({static_cast<int>(t), tuple.back(), table.truth(t)});
    }
    if (!w.certificate.empty()) return finish_witness(table, std::move(w));

    // nothing found even above 0: push the avoidance down one arity via
    // the normal representative of the class
    if (failed_at != 0)
        throw std::logic_error("class enumeration stopped without a failure point");
    LargenessGraph reduced = restrict_graph(normalize(gamma));
    std::vector<int> pool = tail_above(H, 0);
    auto head = find_graph_realizer(pool, arity - 1, reduced, table);
    if (!head) return largeness_rec(pool, table, arity - 1, reduced);
    throw InsufficientDataError(
        "no same-class tuple lies above 0, yet its normal restriction is realized; "
        "the set is too short to close a same-class tuple");
}

} // namespace

DominationWitness extract_dominator_largeness(const ThinWitness& w, const ApproxTable& table,
                                              int n, std::optional<LargenessGraph> target) {
    if (n <= 1)
        throw InputError("the arity-1 largeness coloring has one color and no thin sets");
    if (n > 10) throw SizeGuardError("arity exceeds the largeness palette bound 10");
    const std::vector<int>& H = w.set;
    check_set(H, table);
    if (H.back() >= table.stages())
        throw InputError("witness set reaches past the stage count");
    if (binom(static_cast<int>(H.size()), n) > 2e6)
        throw SizeGuardError("witness set too large for the color recount");

    std::set<GraphCode> realized;
    each_combination(H, n, [&](const std::vector<int>& t) {
        realized.insert(largeness_graph_of(table, t).code());
    });

    LargenessGraph gamma(n);
    if (target) {
        if (target->size() != n) throw InputError("target graph has the wrong size");
        if (!is_valid(*target)) throw InputError("target is not a valid largeness graph");
        if (realized.count(target->code()))
            throw InputError("target color is realized by the set");
        gamma = *target;
    } else {
        const LargenessGraph* pick = nullptr;
        for (const auto& g : enumerate_graphs(n)) {
            if (realized.count(g.code())) continue;
            if (is_adjacent_free(g)) {
                pick = &g; // the direct case; codes ascend, first wins
                break;
            }
            if (!pick) pick = &g;
        }
        if (!pick) throw InputError("every largeness color occurs on the set");
        gamma = *pick;
    }
    return largeness_rec(H, table, n, gamma);
}

} // namespace thinset
