#ifndef THINSET_SEQUENCES_HPP
#define THINSET_SEQUENCES_HPP

#include <compare>
#include <vector>

#include "thinset/bigint.hpp"

namespace thinset {

enum class SequenceKind { catalan, schroder, ell };

/// A prefix of one of the counting sequences. Catalan and Schroder numbers
/// are indexed from 0, the ell sequence from 1.
struct SequenceTable {
    SequenceKind kind;
    int first_index;
    std::vector<BigInt> values;

    const BigInt& at(int index) const;
    int last_index() const { return first_index + static_cast<int>(values.size()) - 1; }
};

/// d_0 = 1, d_{n+1} = sum_{i<=n} d_i * d_{n-i}.
SequenceTable catalan_sequence(int max_index);
BigInt catalan(int n);

/// S_0 = 1, S_n = S_{n-1} + sum_{k<n} S_k * S_{n-1-k}.
SequenceTable schroder_sequence(int max_index);
BigInt schroder(int n);

/// A strictly decreasing non-empty sequence over {1, ..., n-1}. The empty
/// sequence stands for epsilon and is allowed as a weight argument only.
class DecSeq {
public:
    DecSeq(int n, std::vector<int> entries);

    int n() const { return n_; }
    const std::vector<int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    int length() const { return static_cast<int>(entries_.size()); }

    /// sigma^+: the last (smallest) entry; n for epsilon.
    int plus() const;
    /// sigma^-: the sequence without its last entry.
    DecSeq minus() const;

    bool operator==(const DecSeq&) const = default;

private:
    int n_;
    std::vector<int> entries_;
};

/// All of Dec_n, ordered by length and then lexicographically by entries.
/// Dec_1 is empty; |Dec_n| = 2^{n-1} - 1.
std::vector<DecSeq> dec_sequences(int n);

/// The product weight of sigma at level n:
///   ell(n, epsilon)        = 1
///   ell(n, n_0 n_1 ... n_s) = ell_{n-n_0} * prod_{i=1}^{s} ell_{n_{i-1}-n_i}
/// taking ell values from the given table.
BigInt ell_weight(int n, const DecSeq& sigma, const SequenceTable& ell);

/// ell_1 = 1, ell_{n+1} = ell_n + sum_{sigma in Dec_n} ell(n, sigma) * ell_{sigma^+}.
SequenceTable ell_sequence(int max_index);

} // namespace thinset

#endif
