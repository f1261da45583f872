#include "slnpres/indexseq.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace slnpres {

IndexSeq::IndexSeq(int n_, std::vector<int> entries_) : n(n_), entries(std::move(entries_)) {
    if (n < 2) throw std::invalid_argument("IndexSeq: n must be >= 2");
    int prev = 0;
    for (int e : entries) {
        if (e < 1 || e > n) throw std::invalid_argument("IndexSeq: entry out of range [1," + std::to_string(n) + "]");
        if (e <= prev) throw std::invalid_argument("IndexSeq: entries must be strictly increasing");
        prev = e;
    }
}

bool IndexSeq::operator<(const IndexSeq& o) const {
    if (entries.size() != o.entries.size()) return entries.size() < o.entries.size();
    return entries < o.entries;
}

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::optional<NormalizedIndex> normalize_index(int n, const std::vector<int>& raw) {
    for (int e : raw) {
        if (e < 1 || e > n) throw std::invalid_argument("normalize_index: entry out of range");
    }
    for (size_t i = 0; i < raw.size(); ++i)
        for (size_t j = i + 1; j < raw.size(); ++j)
            if (raw[i] == raw[j]) return std::nullopt;
    std::vector<int> sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    return NormalizedIndex{permutation_sign(raw), IndexSeq(n, sorted)};
}

std::pair<IndexSeq, int> complement(const IndexSeq& seq) {
    std::vector<int> comp;
    size_t pos = 0;
    for (int v = 1; v <= seq.n; ++v) {
        if (pos < seq.entries.size() && seq.entries[pos] == v) {
            ++pos;
        } else {
            comp.push_back(v);
        }
    }
    std::vector<int> concat = seq.entries;
    concat.insert(concat.end(), comp.begin(), comp.end());
    return {IndexSeq(seq.n, comp), permutation_sign(concat)};
}

std::vector<IndexSeq> all_index_seqs(int n, int d) {
    std::vector<IndexSeq> out;
    if (d < 0 || d > n) return out;
    std::vector<int> cur(d);
    // standard lexicographic combination enumeration; d = 0 yields the empty sequence
    for (int i = 0; i < d; ++i) cur[i] = i + 1;
    while (true) {
        out.emplace_back(n, cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == n - (d - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace slnpres
