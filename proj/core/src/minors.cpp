#include "slnpres/minors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace slnpres {

namespace {
std::mutex cache_mutex;
std::map<int, VarTablePtr> matrix_tables;

// Leibniz expansion of the determinant of the d x d matrix of variables
// given positionally; d <= 5 at desk scale, so d! stays tiny.
Polynomial leibniz_det(const VarTablePtr& table, const std::vector<std::vector<VarId>>& entry) {
    const int d = static_cast<int>(entry.size());
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    Polynomial out(table);
    do {
        std::vector<Monomial::Entry> es;
        es.reserve(d);
        for (int r = 0; r < d; ++r) es.emplace_back(entry[r][perm[r]], 1);
        std::vector<int> p1(perm.begin(), perm.end());
        out = out + Polynomial::term(table, Rat(permutation_sign(p1)), Monomial(std::move(es)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}
}  // namespace

VarTablePtr matrix_vartable(int n) {
    if (n < 2) throw std::invalid_argument("matrix_vartable: n must be >= 2");
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = matrix_tables.find(n);
    if (it != matrix_tables.end()) return it->second;
    std::vector<VarDesc> vars;
    vars.reserve(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) vars.push_back(MatrixVar{n, i, j});
    auto table = VarTable::make(std::move(vars));
    matrix_tables.emplace(n, table);
    return table;
}

VarId matrix_var_id(int n, int row, int col) {
    if (row < 1 || row > n || col < 1 || col > n)
        throw std::invalid_argument("matrix_var_id: index out of range");
    return static_cast<VarId>((row - 1) * n + (col - 1));
}

Polynomial minor(int n, Sign sign, const IndexSeq& seq) {
    const int d = seq.length();
    if (seq.n != n) throw std::invalid_argument("minor: sequence over a different n");
    if (d < 1 || d > n - 1) throw std::invalid_argument("minor: length out of range [1,n-1]");
    VarTablePtr table = matrix_vartable(n);
    const int col0 = sign == Sign::Minus ? 1 : n - d + 1;
    std::vector<std::vector<VarId>> entry(d, std::vector<VarId>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) entry[r][c] = matrix_var_id(n, seq.entries[r], col0 + c);
    return leibniz_det(table, entry);
}

Polynomial determinant(int n) {
    VarTablePtr table = matrix_vartable(n);
    std::vector<std::vector<VarId>> entry(n, std::vector<VarId>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) entry[r][c] = matrix_var_id(n, r + 1, c + 1);
    return leibniz_det(table, entry);
}

std::unordered_map<VarId, Rat> identity_point(int n) {
    std::unordered_map<VarId, Rat> pt;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) pt.emplace(matrix_var_id(n, i, j), Rat(i == j ? 1 : 0));
    return pt;
}

std::optional<Weight> torus_weight_of(int n, const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("torus_weight_of: zero polynomial");
    std::optional<Weight> weight;
    for (const auto& [m, c] : p.terms()) {
        std::vector<long> cols(n, 0);
        for (const auto& [v, e] : m.entries()) {
            const auto* mv = std::get_if<MatrixVar>(&p.table()->desc(v));
            if (mv == nullptr) throw std::invalid_argument("torus_weight_of: non-matrix variable");
            cols[mv->col - 1] += e;
        }
        Weight w(n, std::move(cols));
        if (!weight)
            weight = w;
        else if (*weight != w)
            return std::nullopt;
    }
    return weight;
}

}  // namespace slnpres
