#include "slnpres/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace slnpres {

Monomial::Monomial(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    for (const auto& [v, e] : entries) {
        if (e == 0) continue;
        if (!entries_.empty() && entries_.back().first == v)
            entries_.back().second += e;
        else
            entries_.emplace_back(v, e);
    }
}

const Monomial& Monomial::one() {
    static const Monomial m;
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : entries_) d += e;
    return d;
}

unsigned Monomial::degree_in(VarId v) const {
    for (const auto& [w, e] : entries_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + o.entries_.size());
    size_t i = 0, j = 0;
    while (i < entries_.size() || j < o.entries_.size()) {
        if (j == o.entries_.size() || (i < entries_.size() && entries_[i].first < o.entries_[j].first)) {
            out.entries_.push_back(entries_[i++]);
        } else if (i == entries_.size() || o.entries_[j].first < entries_[i].first) {
            out.entries_.push_back(o.entries_[j++]);
        } else {
            out.entries_.emplace_back(entries_[i].first, entries_[i].second + o.entries_[j].second);
            ++i, ++j;
        }
    }
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    size_t j = 0;
    for (const auto& [v, e] : entries_) {
        while (j < o.entries_.size() && o.entries_[j].first < v) ++j;
        if (j == o.entries_.size() || o.entries_[j].first != v || o.entries_[j].second < e) return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
    Monomial out;
    size_t j = 0;
    for (const auto& [v, e] : entries_) {
        unsigned sub = 0;
        while (j < divisor.entries_.size() && divisor.entries_[j].first < v) ++j;
        if (j < divisor.entries_.size() && divisor.entries_[j].first == v) sub = divisor.entries_[j].second;
        if (sub > e) throw std::invalid_argument("Monomial::divided_by: not divisible");
        if (e > sub) out.entries_.emplace_back(v, e - sub);
    }
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t i = 0, j = 0;
    while (i < a.entries_.size() || j < b.entries_.size()) {
        if (j == b.entries_.size() || (i < a.entries_.size() && a.entries_[i].first < b.entries_[j].first)) {
            out.entries_.push_back(a.entries_[i++]);
        } else if (i == a.entries_.size() || b.entries_[j].first < a.entries_[i].first) {
            out.entries_.push_back(b.entries_[j++]);
        } else {
            out.entries_.emplace_back(a.entries_[i].first, std::max(a.entries_[i].second, b.entries_[j].second));
            ++i, ++j;
        }
    }
    return out;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
        if (a.entries_[i].first < b.entries_[j].first)
            ++i;
        else if (b.entries_[j].first < a.entries_[i].first)
            ++j;
        else
            return false;
    }
    return true;
}

}  // namespace slnpres
