#include "slnpres/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace slnpres {

Polynomial::Polynomial(VarTablePtr table, TermMap terms) : table_(std::move(table)) {
    if (!table_) throw std::invalid_argument("Polynomial: null table");
    for (auto& [m, c] : terms)
        if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::constant(VarTablePtr table, const Rat& c) {
    Polynomial p(std::move(table));
    if (c != 0) p.terms_.emplace(Monomial::one(), c);
    return p;
}

Polynomial Polynomial::variable(VarTablePtr table, VarId v) {
    if (v >= table->size()) throw std::invalid_argument("Polynomial::variable: id out of range");
    Polynomial p(std::move(table));
    p.terms_.emplace(Monomial({{v, 1}}), Rat(1));
    return p;
}

Polynomial Polynomial::term(VarTablePtr table, const Rat& c, const Monomial& m) {
    Polynomial p(std::move(table));
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rat Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<VarId> Polynomial::support() const {
    std::vector<bool> seen(table_ ? table_->size() : 0, false);
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.entries()) seen[v] = true;
    std::vector<VarId> out;
    for (VarId v = 0; v < seen.size(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

void Polynomial::require_same_table(const Polynomial& o, const char* op) const {
    if (!table_ || !o.table_ || table_->table_id() != o.table_->table_id())
        throw std::invalid_argument(std::string(op) + ": operands over different variable tables");
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_table(o, "add");
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_table(o, "sub");
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(table_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_table(o, "mul");
    Polynomial out(table_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial out(table_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial out = Polynomial::constant(table_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) out = out * base;
        base = e > 1 ? base * base : base;
        e >>= 1u;
    }
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!table_ || !o.table_) return is_zero() && o.is_zero() && table_ == o.table_;
    return table_->table_id() == o.table_->table_id() && terms_ == o.terms_;
}

Polynomial Polynomial::substitute(const std::unordered_map<VarId, Polynomial>& images) const {
    // Locate the target table from any provided image; a substitution with
    // no occurring variables keeps the source table.
    VarTablePtr target;
    for (const auto& [v, img] : images) {
        if (!img.table()) throw std::invalid_argument("substitute: image without table");
        if (target && target->table_id() != img.table()->table_id())
            throw std::invalid_argument("substitute: images over different tables");
        if (!target) target = img.table();
    }
    if (!target) target = table_;

    // Per-variable power cache; exponents in the presentations are tiny.
    std::unordered_map<VarId, std::vector<Polynomial>> powers;
    auto power = [&](VarId v, unsigned e) -> const Polynomial& {
        auto it = images.find(v);
        if (it == images.end())
            throw std::invalid_argument("substitute: no image for variable '" + table_->name(v) + "'");
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * it->second);
        return cache[e];
    };

    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
        Polynomial prod = Polynomial::constant(target, c);
        for (const auto& [v, e] : m.entries()) prod = prod * power(v, e);
        out = out + prod;
    }
    return out;
}

Rat Polynomial::evaluate(const std::unordered_map<VarId, Rat>& point) const {
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat val = c;
        for (const auto& [v, e] : m.entries()) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("evaluate: variable '" + table_->name(v) + "' not assigned");
            for (unsigned k = 0; k < e; ++k) val *= it->second;
        }
        total += val;
    }
    return total;
}

std::pair<Monomial, Rat> Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::invalid_argument("leading_term: zero polynomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms_)
        if (!best || order.greater(m, *best)) best = &m;
    return {*best, terms_.at(*best)};
}

std::vector<std::pair<Monomial, Rat>> Polynomial::sorted_terms(const MonomialOrder& order) const {
    std::vector<std::pair<Monomial, Rat>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [&order](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
    return out;
}

std::string monomial_text(const VarTable& table, const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    // most significant variable first
    const auto& es = m.entries();
    for (auto it = es.rbegin(); it != es.rend(); ++it) {
        if (!out.empty()) out += "*";
        out += table.name(it->first);
        if (it->second > 1) out += "^" + std::to_string(it->second);
    }
    return out;
}

std::string Polynomial::canonical_text(const MonomialOrder& order) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted_terms(order)) {
        const bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (m.is_one()) {
            out += rat_to_string(a);
        } else {
            if (a != 1) out += rat_to_string(a) + "*";
            out += monomial_text(*table_, m);
        }
    }
    return out;
}

}  // namespace slnpres
