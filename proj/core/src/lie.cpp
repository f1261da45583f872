#include "slnpres/lie.hpp"

#include "slnpres/linalg.hpp"

#include <functional>
#include <stdexcept>

namespace slnpres {

LieElt::LieElt(int n, std::vector<std::vector<Rat>> entries) : n_(n), m_(std::move(entries)) {
    if (n_ < 2) throw std::invalid_argument("LieElt: n must be >= 2");
    if (static_cast<int>(m_.size()) != n_) throw std::invalid_argument("LieElt: wrong row count");
    Rat tr(0);
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(m_[i].size()) != n_) throw std::invalid_argument("LieElt: wrong column count");
        tr += m_[i][i];
    }
    if (tr != 0) throw std::invalid_argument("LieElt: trace must be 0");
}

LieElt LieElt::elementary(int n, int a, int b) {
    if (a == b) throw std::invalid_argument("LieElt::elementary: diagonal e_aa is not traceless");
    if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("LieElt::elementary: index out of range");
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    m[a - 1][b - 1] = 1;
    return LieElt(n, std::move(m));
}

LieElt LieElt::cartan(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("LieElt::cartan: index out of range");
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    m[i - 1][i - 1] = 1;
    m[i][i] = -1;
    return LieElt(n, std::move(m));
}

std::vector<LieElt> LieElt::chevalley_generators(int n) {
    std::vector<LieElt> out;
    for (int a = 1; a <= n - 1; ++a) {
        out.push_back(elementary(n, a, a + 1));
        out.push_back(elementary(n, a + 1, a));
    }
    return out;
}

LieElt LieElt::operator+(const LieElt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("LieElt: size mismatch");
    auto m = m_;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m[i][j] += o.m_[i][j];
    return LieElt(n_, std::move(m));
}

LieElt LieElt::scaled(const Rat& c) const {
    auto m = m_;
    for (auto& row : m)
        for (auto& x : row) x *= c;
    return LieElt(n_, std::move(m));
}

LieElt LieElt::commutator(const LieElt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("LieElt: size mismatch");
    std::vector<std::vector<Rat>> m(n_, std::vector<Rat>(n_, Rat(0)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Rat s(0);
            for (int k = 0; k < n_; ++k) s += m_[i][k] * o.m_[k][j] - o.m_[i][k] * m_[k][j];
            m[i][j] = std::move(s);
        }
    return LieElt(n_, std::move(m));
}

Rat killing_form(const LieElt& x, const LieElt& y) {
    if (x.n() != y.n()) throw std::invalid_argument("killing_form: size mismatch");
    const int n = x.n();
    Rat tr(0);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) tr += x.entry(i, k) * y.entry(k, i);
    return Rat(2L * n) * tr;
}

DualBasisPair dual_bases_for(std::vector<LieElt> basis) {
    const std::size_t m = basis.size();
    if (m == 0) throw std::invalid_argument("dual_bases_for: empty basis");
    RatMatrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) gram.at(i, j) = killing_form(basis[i], basis[j]);

    // invert through RREF of [G | I]
    RatMatrix eye(m, m);
    for (std::size_t i = 0; i < m; ++i) eye.at(i, i) = 1;
    auto [red, pivots] = gram.augmented(eye).rref();
    if (pivots.size() != m) throw std::invalid_argument("dual_bases_for: basis is Killing-degenerate");

    std::vector<LieElt> dual;
    dual.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        LieElt d = basis[0].scaled(red.at(i, m + 0));
        for (std::size_t j = 1; j < m; ++j) d = d + basis[j].scaled(red.at(i, m + j));
        dual.push_back(std::move(d));
    }
    return DualBasisPair{std::move(basis), std::move(dual)};
}

DualBasisPair dual_bases(int n) {
    std::vector<LieElt> basis;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b) basis.push_back(LieElt::elementary(n, a, b));
    for (int i = 1; i <= n - 1; ++i) basis.push_back(LieElt::cartan(n, i));
    return dual_bases_for(std::move(basis));
}

namespace {

// Derivation extension of a linear map on variables. A nullopt image marks
// the variable as constant for this derivation.
Polynomial apply_derivation(const Polynomial& p,
                            const std::function<const Polynomial*(VarId)>& image_of) {
    Polynomial out(p.table());
    for (const auto& [m, c] : p.terms()) {
        for (size_t k = 0; k < m.entries().size(); ++k) {
            const auto& [v, e] = m.entries()[k];
            const Polynomial* img = image_of(v);
            if (img == nullptr || img->is_zero()) continue;
            // c * e * v^(e-1) * (other factors) * img
            std::vector<Monomial::Entry> rest;
            rest.reserve(m.entries().size());
            for (size_t k2 = 0; k2 < m.entries().size(); ++k2) {
                if (k2 == k) {
                    if (e > 1) rest.emplace_back(v, e - 1);
                } else {
                    rest.push_back(m.entries()[k2]);
                }
            }
            out = out + img->scaled(c * Rat(static_cast<long>(e))) *
                            Polynomial::term(p.table(), Rat(1), Monomial(std::move(rest)));
        }
    }
    return out;
}

// Image of one matrix variable: X . x_{i,j} = -sum_k X_{i,k} x_{k,j}.
Polynomial matrix_var_image(const LieElt& x, const VarTablePtr& table, const MatrixVar& mv) {
    const int n = x.n();
    Polynomial out(table);
    for (int k = 1; k <= n; ++k) {
        const Rat& coef = x.entry(mv.row, k);
        if (coef == 0) continue;
        VarId target = table->id_of_name(var_desc_name(MatrixVar{n, k, mv.col}));
        out = out + Polynomial::variable(table, target).scaled(-coef);
    }
    return out;
}

// Row replacement on x±_{i1..id}; normalize_index supplies signs and zeros.
Polynomial pres_var_image(const LieElt& x, const VarTablePtr& table, const PresVar& pv) {
    const int n = x.n();
    Polynomial out(table);
    for (size_t r = 0; r < pv.seq.entries.size(); ++r) {
        const int row = pv.seq.entries[r];
        for (int k = 1; k <= n; ++k) {
            const Rat& coef = x.entry(row, k);
            if (coef == 0) continue;
            std::vector<int> raw = pv.seq.entries;
            raw[r] = k;
            auto norm = normalize_index(n, raw);
            if (!norm) continue;
            VarId target = table->id_of_name(var_desc_name(PresVar{pv.sign, norm->seq}));
            out = out + Polynomial::variable(table, target).scaled(-coef * Rat(norm->sign));
        }
    }
    return out;
}

// Cache of variable images for one (LieElt, table) pass. Whether the table
// holds presentation or matrix variables is decided by the caller.
struct ImageCache {
    const LieElt& x;
    const VarTablePtr& table;
    const std::vector<bool>* leg;  // optional restriction
    bool pres;
    mutable std::map<VarId, Polynomial> cache;

    const Polynomial* operator()(VarId v) const {
        if (leg != nullptr && !(*leg)[v]) return nullptr;
        auto it = cache.find(v);
        if (it == cache.end()) {
            const VarDesc& d = table->desc(v);
            Polynomial img = pres ? pres_var_image(x, table, std::get<PresVar>(d))
                                  : matrix_var_image(x, table, std::get<MatrixVar>(d));
            it = cache.emplace(v, std::move(img)).first;
        }
        return &it->second;
    }
};

}  // namespace

Polynomial act_matrix(const LieElt& x, const Polynomial& p) {
    ImageCache images{x, p.table(), nullptr, false, {}};
    return apply_derivation(p, std::cref(images));
}

Polynomial act_pres(const LieElt& x, const Polynomial& p) {
    ImageCache images{x, p.table(), nullptr, true, {}};
    return apply_derivation(p, std::cref(images));
}

Polynomial act_pres_leg(const LieElt& x, const Polynomial& p, const std::vector<bool>& leg) {
    if (leg.size() != p.table()->size()) throw std::invalid_argument("act_pres_leg: leg mask size mismatch");
    ImageCache images{x, p.table(), &leg, true, {}};
    return apply_derivation(p, std::cref(images));
}

TensorSplit TensorSplit::by_sign(const VarTable& table) {
    TensorSplit s;
    s.plus_leg.resize(table.size());
    for (VarId v = 0; v < table.size(); ++v)
        s.plus_leg[v] = std::get<PresVar>(table.desc(v)).sign == Sign::Plus;
    return s;
}

std::vector<bool> TensorSplit::minus_leg() const {
    std::vector<bool> out(plus_leg.size());
    for (size_t i = 0; i < plus_leg.size(); ++i) out[i] = !plus_leg[i];
    return out;
}

std::map<std::pair<int, int>, unsigned> pres_multidegree(const VarTable& table, const Monomial& m) {
    std::map<std::pair<int, int>, unsigned> deg;
    for (const auto& [v, e] : m.entries()) {
        const auto& pv = std::get<PresVar>(table.desc(v));
        deg[{static_cast<int>(pv.sign), pv.seq.length()}] += e;
    }
    return deg;
}

bool is_multihomogeneous(const Polynomial& p) {
    bool first = true;
    std::map<std::pair<int, int>, unsigned> ref;
    for (const auto& [m, c] : p.terms()) {
        auto deg = pres_multidegree(*p.table(), m);
        if (first) {
            ref = std::move(deg);
            first = false;
        } else if (deg != ref) {
            return false;
        }
    }
    return true;
}

Polynomial casimir_delta(const DualBasisPair& bases, const Polynomial& p, const TensorSplit& split) {
    if (!is_multihomogeneous(p)) throw std::invalid_argument("casimir_delta: input is not bihomogeneous");
    const std::vector<bool>& plus = split.plus_leg;
    const std::vector<bool> minus = split.minus_leg();
    Polynomial out(p.table());
    for (size_t i = 0; i < bases.basis.size(); ++i) {
        out = out + act_pres_leg(bases.basis[i], act_pres_leg(bases.dual[i], p, minus), plus);
        out = out + act_pres_leg(bases.dual[i], act_pres_leg(bases.basis[i], p, minus), plus);
    }
    return out;
}

Polynomial casimir_delta(int n, const Polynomial& p, const TensorSplit& split) {
    return casimir_delta(dual_bases(n), p, split);
}

bool is_invariant(int n, const Polynomial& p, VarSpace space) {
    for (const LieElt& x : LieElt::chevalley_generators(n)) {
        Polynomial image = space == VarSpace::MatrixVars ? act_matrix(x, p) : act_pres(x, p);
        if (!image.is_zero()) return false;
    }
    return true;
}

}  // namespace slnpres
