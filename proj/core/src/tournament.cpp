#include "thinset/tournament.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "thinset/errors.hpp"

namespace thinset {

Tournament::Tournament(int n) : n_(n) {
    if (n < 1) throw InputError("tournament needs at least one vertex");
    forward_.assign(static_cast<size_t>(n) * (n - 1) / 2, true);
}

int Tournament::pair_index(int u, int v) const {
    // u < v assumed
    return v * (v - 1) / 2 + u;
}

bool Tournament::arc(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InputError("tournament arc query out of range");
    if (u < v) return forward_[pair_index(u, v)];
    return !forward_[pair_index(v, u)];
}

void Tournament::set_arc(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InputError("tournament arc out of range");
    if (u < v)
        forward_[pair_index(u, v)] = true;
    else
        forward_[pair_index(v, u)] = false;
}

Tournament tournament_from_g(const ApproxTable& table, const std::vector<int>& domain) {
    if (domain.empty()) throw InputError("tournament domain is empty");
    for (size_t i = 1; i < domain.size(); ++i)
        if (domain[i] <= domain[i - 1])
            throw InputError("tournament domain is not strictly increasing");
    if (domain.back() >= table.stable_bound())
        throw InputError("tournament domain reaches past the stable bound");
    Tournament t(static_cast<int>(domain.size()));
    for (size_t i = 0; i < domain.size(); ++i)
        for (size_t j = i + 1; j < domain.size(); ++j) {
            if (table.gap(domain[i], domain[j]) == Gap::small)
                t.set_arc(static_cast<int>(i), static_cast<int>(j));
            else
                t.set_arc(static_cast<int>(j), static_cast<int>(i));
        }
    return t;
}

bool is_transitive(const Tournament& t, const std::vector<int>& vertices) {
    // order by wins inside the subset; transitive iff all arcs point forward
    std::vector<int> order = vertices;
    std::vector<int> wins(vertices.size(), 0);
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = 0; j < vertices.size(); ++j)
            if (i != j && t.arc(vertices[i], vertices[j])) ++wins[i];
    std::vector<size_t> pos(vertices.size());
    for (size_t i = 0; i < pos.size(); ++i) pos[i] = i;
    std::sort(pos.begin(), pos.end(), [&](size_t a, size_t b) { return wins[a] > wins[b]; });
    for (size_t i = 0; i < pos.size(); ++i)
        for (size_t j = i + 1; j < pos.size(); ++j)
            if (!t.arc(vertices[pos[i]], vertices[pos[j]])) return false;
    return true;
}

namespace {

bool sorted_less(uint32_t a, uint32_t b) {
    // compare as sorted vertex lists
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

} // namespace

std::vector<int> max_transitive_subtournament(const Tournament& t) {
    const int n = t.size();
    if (n > 24) throw SizeGuardError("tournament size " + std::to_string(n) +
                                     " exceeds the exact search bound 24");
    std::vector<uint32_t> beats(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && t.arc(u, v)) beats[u] |= 1u << v;

    // a transitive set is built in arc order: each new vertex must be
    // beaten by all earlier picks, so candidates shrink to the newest
    // pick's out-neighborhood

    // phase 1: maximum size, pruning on chosen + candidates
    int best = 0;
    {
        struct {
            const std::vector<uint32_t>& beats;
            int best = 0;
            void go(int chosen, uint32_t cand) {
                if (chosen + std::popcount(cand) <= best) return;
                if (chosen > best) best = chosen;
                uint32_t rest = cand;
                while (rest) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    go(chosen + 1, cand & beats[v]);
                }
            }
        } s{beats};
        s.go(0, (1u << n) - 1);
        best = s.best;
    }

    // phase 2: lexicographically least vertex set of that size
    struct {
        const std::vector<uint32_t>& beats;
        int target;
        uint32_t best_mask = 0;
        bool have = false;
        void go(int chosen, uint32_t mask, uint32_t cand) {
            if (chosen + std::popcount(cand) < target) return;
            if (chosen == target) {
                if (!have || sorted_less(mask, best_mask)) {
                    best_mask = mask;
                    have = true;
                }
                return;
            }
            uint32_t rest = cand;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                go(chosen + 1, mask | (1u << v), cand & beats[v]);
            }
        }
    } s2{beats, best};
    s2.go(0, 0, (1u << n) - 1);

    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (s2.best_mask & (1u << v)) out.push_back(v);
    return out;
}

} // namespace thinset
