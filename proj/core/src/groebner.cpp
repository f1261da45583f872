#include "slnpres/groebner.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace slnpres {

namespace {

// Internal dense-sorted representation: terms strictly descending in the
// active order. Division and S-polynomial loops run on this form and convert
// back to Polynomial at the boundary.
using Term = std::pair<Monomial, Rat>;
using OrderedPoly = std::vector<Term>;

OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
    return p.sorted_terms(order);
}

Polynomial from_ordered(const VarTablePtr& table, const OrderedPoly& p) {
    Polynomial::TermMap terms;
    for (const auto& [m, c] : p) terms.emplace(m, c);
    return Polynomial(table, std::move(terms));
}

// a[a_from..] - c * (m * b), both sorted descending; result sorted descending.
OrderedPoly subtract_multiple(const OrderedPoly& a, const Rat& c, const Monomial& m, const OrderedPoly& b,
                              const MonomialOrder& order, size_t a_from = 0) {
    OrderedPoly out;
    out.reserve(a.size() - a_from + b.size());
    size_t i = a_from, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        Monomial mb = m * b[j].first;
        if (i == a.size()) {
            out.emplace_back(std::move(mb), -c * b[j].second);
            ++j;
            continue;
        }
        int cmp = order.compare(a[i].first, mb);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.emplace_back(std::move(mb), -c * b[j].second);
            ++j;
        } else {
            Rat coeff = a[i].second - c * b[j].second;
            if (coeff != 0) out.emplace_back(a[i].first, std::move(coeff));
            ++i, ++j;
        }
    }
    return out;
}

void make_monic(OrderedPoly& p) {
    if (p.empty() || p.front().second == 1) return;
    Rat lc = p.front().second;
    for (auto& [m, c] : p) c /= lc;
}

struct Reducer {
    const std::vector<OrderedPoly>* basis;  // all monic
    const std::vector<Monomial>* lms;
    const MonomialOrder* order;

    // Full normal form: head and tail reduction, first matching basis
    // element in list order. Deterministic.
    OrderedPoly reduce(OrderedPoly h) const {
        OrderedPoly remainder;
        size_t start = 0;
        while (start < h.size()) {
            const auto& [hm, hc] = h[start];
            bool reduced = false;
            for (size_t g = 0; g < basis->size(); ++g) {
                if ((*lms)[g].divides(hm)) {
                    h = subtract_multiple(h, hc, hm.divided_by((*lms)[g]), (*basis)[g], *order, start);
                    start = 0;
                    reduced = true;
                    break;
                }
            }
            if (!reduced) remainder.push_back(std::move(h[start++]));
        }
        return remainder;
    }
};

OrderedPoly s_poly_ordered(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
    const Monomial l = Monomial::lcm(f.front().first, g.front().first);
    // l/LM(f) * f / lc(f)  -  l/LM(g) * g / lc(g)
    OrderedPoly lhs;
    lhs.reserve(f.size());
    Monomial mf = l.divided_by(f.front().first);
    for (const auto& [m, c] : f) lhs.emplace_back(mf * m, c / f.front().second);
    return subtract_multiple(lhs, Rat(1) / g.front().second, l.divided_by(g.front().first), g, order);
}

struct Pair {
    size_t i, j;  // i < j
    Monomial lcm;
    unsigned lcm_deg;
};

// Gebauer-Moeller update: prunes the pending pair set and generates the
// pairs for the new basis element t (criteria M, F, and B; coprime pairs
// participate in pruning, then drop).
void gm_update(std::vector<Pair>& pairs, std::vector<Monomial>& lms, const Monomial& lm_t) {
    const size_t t = lms.size();
    struct Cand {
        size_t i;
        Monomial lcm;
        bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(t);
    for (size_t i = 0; i < t; ++i)
        cands.push_back({i, Monomial::lcm(lms[i], lm_t), Monomial::coprime(lms[i], lm_t)});

    std::vector<Cand> kept;
    for (size_t k = 0; k < cands.size(); ++k) {
        bool keep = cands[k].coprime;
        if (!keep) {
            bool dominated = false;
            for (size_t k2 = k + 1; k2 < cands.size() && !dominated; ++k2)
                if (cands[k2].lcm.divides(cands[k].lcm)) dominated = true;
            for (const auto& d : kept)
                if (dominated) break;
                else if (d.lcm.divides(cands[k].lcm))
                    dominated = true;
            keep = !dominated;
        }
        if (keep) kept.push_back(cands[k]);
    }

    // criterion B on the old pairs
    std::vector<Pair> surviving;
    surviving.reserve(pairs.size());
    for (auto& pr : pairs) {
        if (!lm_t.divides(pr.lcm) || Monomial::lcm(lms[pr.i], lm_t) == pr.lcm ||
            Monomial::lcm(lms[pr.j], lm_t) == pr.lcm)
            surviving.push_back(std::move(pr));
    }
    pairs = std::move(surviving);

    for (auto& c : kept)
        if (!c.coprime) pairs.push_back({c.i, t, std::move(c.lcm), 0});
    for (auto& pr : pairs) pr.lcm_deg = pr.lcm.degree();

    lms.push_back(lm_t);
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
    std::vector<OrderedPoly> bs;
    std::vector<Monomial> lms;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        if (g.table()->table_id() != p.table()->table_id())
            throw std::invalid_argument("normal_form: basis over a different variable table");
        OrderedPoly og = to_ordered(g, order);
        // divide through by the leading coefficient; the remainder is unchanged
        Rat lc = og.front().second;
        for (auto& [m, c] : og) c /= lc;
        lms.push_back(og.front().first);
        bs.push_back(std::move(og));
    }
    if (bs.empty()) throw std::invalid_argument("normal_form: basis has no nonzero element");
    Reducer red{&bs, &lms, &order};
    return from_ordered(p.table(), red.reduce(to_ordered(p, order)));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial: zero input");
    if (f.table()->table_id() != g.table()->table_id())
        throw std::invalid_argument("s_polynomial: different variable tables");
    return from_ordered(f.table(), s_poly_ordered(to_ordered(f, order), to_ordered(g, order), order));
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    VarTablePtr table;
    std::vector<OrderedPoly> input;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;  // zero generators are stripped
        if (table && g.table()->table_id() != table->table_id())
            throw std::invalid_argument("buchberger: generators over different variable tables");
        if (!table) table = g.table();
        input.push_back(to_ordered(g, order));
    }
    if (input.empty()) throw std::invalid_argument("buchberger: no nonzero generator");

    std::vector<OrderedPoly> basis;
    std::vector<Monomial> lms;
    std::vector<Pair> pairs;
    Reducer red{&basis, &lms, &order};

    auto add_element = [&](OrderedPoly h) {
        make_monic(h);
        gm_update(pairs, lms, h.front().first);
        basis.push_back(std::move(h));
    };

    for (auto& g : input) {
        OrderedPoly h = basis.empty() ? std::move(g) : red.reduce(std::move(g));
        if (!h.empty()) add_element(std::move(h));
    }

    while (!pairs.empty()) {
        // normal selection strategy: minimal lcm degree, ties by pair index
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            const auto& a = pairs[k];
            const auto& b = pairs[best];
            if (a.lcm_deg < b.lcm_deg || (a.lcm_deg == b.lcm_deg && (a.i < b.i || (a.i == b.i && a.j < b.j))))
                best = k;
        }
        Pair pr = std::move(pairs[best]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        OrderedPoly h = red.reduce(s_poly_ordered(basis[pr.i], basis[pr.j], order));
        if (!h.empty()) add_element(std::move(h));
    }

    // Minimalize: drop generators whose leading monomial is divisible by
    // another kept one (ties by index).
    std::vector<bool> alive(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < basis.size() && alive[i]; ++j) {
            if (i == j || !alive[j]) continue;
            if (lms[j].divides(lms[i]) && (lms[j] != lms[i] || j < i)) alive[i] = false;
        }
    }
    std::vector<OrderedPoly> minimal;
    std::vector<Monomial> min_lms;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (alive[i]) {
            minimal.push_back(std::move(basis[i]));
            min_lms.push_back(lms[i]);
        }
    }

    // Tail-reduce each generator against the others.
    std::vector<Polynomial> out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OrderedPoly> others;
        std::vector<Monomial> other_lms;
        for (size_t j = 0; j < minimal.size(); ++j) {
            if (j == i) continue;
            others.push_back(minimal[j]);
            other_lms.push_back(min_lms[j]);
        }
        OrderedPoly r = minimal[i];
        if (!others.empty()) {
            Reducer tail{&others, &other_lms, &order};
            r = tail.reduce(std::move(r));
        }
        make_monic(r);
        out.push_back(from_ordered(table, r));
    }

    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term(order).first, b.leading_term(order).first);
    });
    return GroebnerBasis{std::move(out), order, true};
}

bool ideal_member(const Polynomial& p, const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    GroebnerBasis gb = buchberger(gens, order);
    return normal_form(p, gb.generators, order).is_zero();
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<VarId>& drop) {
    VarTablePtr table;
    for (const auto& g : gens)
        if (!g.is_zero()) {
            table = g.table();
            break;
        }
    if (!table) throw std::invalid_argument("eliminate: no nonzero generator");
    MonomialOrder order = MonomialOrder::block(table->size(), drop);
    GroebnerBasis gb = buchberger(gens, order);

    std::vector<Polynomial> out;
    for (const auto& g : gb.generators) {
        bool keeps_only = true;
        for (VarId v : g.support())
            if (order.eliminates(v)) {
                keeps_only = false;
                break;
            }
        if (keeps_only) out.push_back(g);
    }
    return out;
}

}  // namespace slnpres
