#include "thinset/witness.hpp"

#include <algorithm>
#include <set>

#include "thinset/errors.hpp"

namespace thinset {

namespace {

std::set<int> colors_used(const Coloring& f, const std::vector<int>& H) {
    const int n = f.arity();
    if (static_cast<int>(H.size()) < n) return {};
    for (size_t i = 1; i < H.size(); ++i)
        if (H[i] <= H[i - 1]) throw InputError("witness set is not strictly increasing");
    std::set<int> used;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    const int m = static_cast<int>(H.size());
    std::vector<int> tuple(n);
    while (true) {
        for (int i = 0; i < n; ++i) tuple[i] = H[idx[i]];
        used.insert(f.color_of(tuple));
        int i = n - 1;
        while (i >= 0 && idx[i] == m - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return used;
}

} // namespace

ThinWitness make_thin_witness(const Coloring& f, const std::vector<int>& H, int bound) {
    if (bound < 0) throw InputError("negative thinness bound");
    std::set<int> used = colors_used(f, H);
    if (static_cast<int>(used.size()) > bound)
        throw InputError("set uses " + std::to_string(used.size()) +
                         " colors, more than the bound " + std::to_string(bound));
    ThinWitness w;
    w.set = H;
    w.bound = bound;
    w.used_colors.assign(used.begin(), used.end());
    for (int c = 0; c < f.palette().size(); ++c)
        if (!used.count(c)) w.avoided_colors.push_back(c);
    return w;
}

bool verify_thin_witness(const Coloring& f, const ThinWitness& w) {
    std::set<int> used;
    try {
        used = colors_used(f, w.set);
    } catch (const Error&) {
        return false;
    }
    if (static_cast<int>(used.size()) > w.bound) return false;
    if (!std::equal(used.begin(), used.end(), w.used_colors.begin(), w.used_colors.end()))
        return false;
    std::set<int> avoided(w.avoided_colors.begin(), w.avoided_colors.end());
    for (int c : used)
        if (avoided.count(c)) return false;
    for (int c = 0; c < f.palette().size(); ++c)
        if (!used.count(c) && !avoided.count(c)) return false;
    return true;
}

bool verify_domination_witness(const ApproxTable& table, const DominationWitness& w) {
    int last = -1;
    for (const auto& e : w.certificate) {
        if (e.i <= last) return false;
        last = e.i;
        if (e.i < 0 || e.i >= table.stable_bound()) return false;
        if (e.g != table.truth(e.i)) return false;
        if (e.h < e.g) return false;
    }
    return true;
}

TransitivityReport is_g_transitive(const std::vector<int>& H, const ApproxTable& table) {
    for (size_t i = 1; i < H.size(); ++i)
        if (H[i] <= H[i - 1]) throw InputError("set is not strictly increasing");
    if (H.size() >= 3 && H.back() >= table.stable_bound())
        throw InputError("set reaches past the stable bound");
    TransitivityReport r;
    for (size_t a = 0; a + 2 < H.size(); ++a)
        for (size_t b = a + 1; b + 1 < H.size(); ++b)
            for (size_t c = b + 1; c < H.size(); ++c) {
                if (table.gap(H[a], H[b]) == Gap::small &&
                    table.gap(H[b], H[c]) == Gap::small &&
                    table.gap(H[a], H[c]) == Gap::large) {
                    r.ok = false;
                    r.x = H[a];
                    r.y = H[b];
                    r.z = H[c];
                    return r;
                }
            }
    return r;
}

bool all_intervals_large(const std::vector<int>& H, const ApproxTable& table) {
    for (size_t i = 1; i < H.size(); ++i)
        if (H[i] <= H[i - 1]) throw InputError("set is not strictly increasing");
    for (size_t i = 0; i + 1 < H.size(); ++i)
        if (table.gap(H[i], H[i + 1]) == Gap::small) return false;
    return true;
}

} // namespace thinset
