#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace slnpres {

/// Strictly increasing sequence of d integers in [n], 1 <= d <= n-1.
/// These name the rows of the minors f± and hence the variables x±_{i1..id}.
struct IndexSeq {
    int n = 0;
    std::vector<int> entries;  // strictly increasing, values in 1..n

    IndexSeq() = default;
    IndexSeq(int n_, std::vector<int> entries_);

    int length() const { return static_cast<int>(entries.size()); }

    bool operator==(const IndexSeq& o) const { return n == o.n && entries == o.entries; }
    /// Orders by length, then lexicographically; the enumeration order of variables.
    bool operator<(const IndexSeq& o) const;
};

struct NormalizedIndex {
    int sign;  // +1 or -1
    IndexSeq seq;
};

/// Sorts a raw index tuple. Repeated entries give nullopt ("the symbol is 0"),
/// otherwise the increasing rearrangement with the sign of the sorting
/// permutation. Entries outside [n] throw std::invalid_argument.
std::optional<NormalizedIndex> normalize_index(int n, const std::vector<int>& raw);

/// The increasing complement i* of seq in [n] and the sign of the
/// concatenated permutation (i, i*) of [n].
std::pair<IndexSeq, int> complement(const IndexSeq& seq);

/// All increasing sequences of length d in [n], lexicographically ordered.
std::vector<IndexSeq> all_index_seqs(int n, int d);

/// Parity of the inversion count of an arbitrary integer sequence: +1/-1.
int permutation_sign(const std::vector<int>& perm);

}  // namespace slnpres
