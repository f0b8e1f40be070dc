#include "thinset/sequences.hpp"

#include <algorithm>
#include <string>

#include "thinset/errors.hpp"

namespace thinset {

const BigInt& SequenceTable::at(int index) const {
    int offset = index - first_index;
    if (offset < 0 || offset >= static_cast<int>(values.size()))
        throw InputError("sequence index " + std::to_string(index) + " out of table range");
    return values[static_cast<std::size_t>(offset)];
}

SequenceTable catalan_sequence(int max_index) {
    if (max_index < 0) throw InputError("catalan: negative index");
    std::vector<BigInt> d;
    d.reserve(static_cast<std::size_t>(max_index) + 1);
    d.emplace_back(1);
    for (int n = 0; n < max_index; ++n) {
        BigInt next = 0;
        for (int i = 0; i <= n; ++i) next += d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(n - i)];
        d.push_back(next);
    }
    return SequenceTable{SequenceKind::catalan, 0, std::move(d)};
}

BigInt catalan(int n) { return catalan_sequence(n).at(n); }

SequenceTable schroder_sequence(int max_index) {
    if (max_index < 0) throw InputError("schroder: negative index");
    std::vector<BigInt> s;
    s.reserve(static_cast<std::size_t>(max_index) + 1);
    s.emplace_back(1);
    for (int n = 1; n <= max_index; ++n) {
        BigInt next = s[static_cast<std::size_t>(n - 1)];
        for (int k = 0; k < n; ++k) next += s[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(n - 1 - k)];
        s.push_back(next);
    }
    return SequenceTable{SequenceKind::schroder, 0, std::move(s)};
}

BigInt schroder(int n) { return schroder_sequence(n).at(n); }

DecSeq::DecSeq(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ < 1) throw InputError("DecSeq: n must be at least 1");
    int prev = n_;
    for (int e : entries_) {
        if (e < 1 || e >= prev)
            throw InputError("DecSeq: entries must be strictly decreasing within {1, ..., n-1}");
        prev = e;
    }
}

int DecSeq::plus() const { return entries_.empty() ? n_ : entries_.back(); }

DecSeq DecSeq::minus() const {
    if (entries_.empty()) throw InputError("DecSeq: epsilon has no truncation");
    std::vector<int> shorter(entries_.begin(), entries_.end() - 1);
    return DecSeq(n_, std::move(shorter));
}

namespace {

void grow(int n, int bound, std::vector<int>& stem, int want, std::vector<DecSeq>& out) {
    if (static_cast<int>(stem.size()) == want) {
        out.emplace_back(n, stem);
        return;
    }
    // Entries descend, so lexicographic order over fixed length comes from
    // picking each position in ascending value order.
    int remaining = want - static_cast<int>(stem.size());
    for (int v = remaining; v < bound; ++v) {
        stem.push_back(v);
        grow(n, v, stem, want, out);
        stem.pop_back();
    }
}

} // namespace

std::vector<DecSeq> dec_sequences(int n) {
    if (n < 1) throw InputError("dec_sequences: n must be at least 1");
    std::vector<DecSeq> out;
    std::vector<int> stem;
    for (int len = 1; len <= n - 1; ++len) grow(n, n, stem, len, out);
    return out;
}

BigInt ell_weight(int n, const DecSeq& sigma, const SequenceTable& ell) {
    if (ell.kind != SequenceKind::ell) throw InputError("ell_weight: table must hold ell values");
    if (sigma.n() != n) throw InputError("ell_weight: sigma level mismatch");
    if (sigma.empty()) return 1;
    const auto& e = sigma.entries();
    BigInt w = ell.at(n - e[0]);
    for (std::size_t i = 1; i < e.size(); ++i) w *= ell.at(e[i - 1] - e[i]);
    return w;
}

SequenceTable ell_sequence(int max_index) {
    if (max_index < 1) throw InputError("ell_sequence: max index must be at least 1");
    SequenceTable table{SequenceKind::ell, 1, {BigInt(1)}};
    for (int n = 1; n < max_index; ++n) {
        BigInt next = table.at(n);
        for (const DecSeq& sigma : dec_sequences(n))
            next += ell_weight(n, sigma, table) * table.at(sigma.plus());
        table.values.push_back(next);
    }
    return table;
}

} // namespace thinset
