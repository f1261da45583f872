#include "slnpres/monomial_order.hpp"

#include <stdexcept>

namespace slnpres {

namespace {

// Filtered view of a monomial: entries whose membership flag matches `want`.
// An empty mask admits every entry.
struct Filtered {
    const std::vector<Monomial::Entry>& e;
    const std::vector<bool>* mask;
    bool want;

    bool admit(VarId v) const { return mask == nullptr || ((v < mask->size() && (*mask)[v]) == want); }
};

unsigned filtered_degree(const Filtered& f) {
    unsigned d = 0;
    for (const auto& [v, ex] : f.e)
        if (f.admit(v)) d += ex;
    return d;
}

// degrevlex on the filtered entries. Ties at equal degree are broken at the
// least-significant end: first differing low id, smaller exponent wins.
int degrevlex_compare(const Filtered& a, const Filtered& b) {
    unsigned da = filtered_degree(a), db = filtered_degree(b);
    if (da != db) return da < db ? -1 : 1;
    size_t i = 0, j = 0;
    while (true) {
        while (i < a.e.size() && !a.admit(a.e[i].first)) ++i;
        while (j < b.e.size() && !b.admit(b.e[j].first)) ++j;
        if (i == a.e.size() && j == b.e.size()) return 0;
        if (i == a.e.size()) return 1;   // b has an extra low variable -> b smaller
        if (j == b.e.size()) return -1;  // a has an extra low variable -> a smaller
        const auto& [va, ea] = a.e[i];
        const auto& [vb, eb] = b.e[j];
        if (va < vb) return -1;  // a carries the lower variable -> a smaller
        if (vb < va) return 1;
        if (ea != eb) return ea > eb ? -1 : 1;  // larger exponent at the low end -> smaller
        ++i, ++j;
    }
}

// lex: scan from the most significant (highest id) variable downward.
int lex_compare(const std::vector<Monomial::Entry>& a, const std::vector<Monomial::Entry>& b) {
    auto i = a.rbegin();
    auto j = b.rbegin();
    while (i != a.rend() || j != b.rend()) {
        if (i == a.rend()) return -1;
        if (j == b.rend()) return 1;
        if (i->first != j->first) return i->first > j->first ? 1 : -1;
        if (i->second != j->second) return i->second > j->second ? 1 : -1;
        ++i, ++j;
    }
    return 0;
}

}  // namespace

MonomialOrder MonomialOrder::block(std::size_t nvars, const std::vector<VarId>& eliminate) {
    MonomialOrder o(Kind::Block);
    o.elim_.assign(nvars, false);
    for (VarId v : eliminate) {
        if (v >= nvars) throw std::invalid_argument("MonomialOrder::block: eliminate id out of range");
        o.elim_[v] = true;
    }
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Lex:
            return lex_compare(a.entries(), b.entries());
        case Kind::DegRevLex: {
            Filtered fa{a.entries(), nullptr, true}, fb{b.entries(), nullptr, true};
            return degrevlex_compare(fa, fb);
        }
        case Kind::Block: {
            Filtered ea{a.entries(), &elim_, true}, eb{b.entries(), &elim_, true};
            if (int c = degrevlex_compare(ea, eb); c != 0) return c;
            Filtered ka{a.entries(), &elim_, false}, kb{b.entries(), &elim_, false};
            return degrevlex_compare(ka, kb);
        }
    }
    return 0;
}

}  // namespace slnpres
