#pragma once

#include "slnpres/vartable.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace slnpres {

/// Sparse exponent vector: (var id, exponent) pairs with ids strictly
/// increasing and exponents positive. The empty monomial is 1.
class Monomial {
public:
    using Entry = std::pair<VarId, unsigned>;

    Monomial() = default;
    /// Entries need not be sorted; duplicates are combined, zeros dropped.
    explicit Monomial(std::vector<Entry> entries);

    static const Monomial& one();

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    unsigned degree() const;
    unsigned degree_in(VarId v) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Quotient o.divided_by(*this); caller guarantees divisibility.
    Monomial divided_by(const Monomial& divisor) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    /// True when the supports are disjoint (lcm == product).
    static bool coprime(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<Entry> entries_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (const auto& [v, e] : m.entries()) {
            h = (h ^ v) * 1099511628211ull;
            h = (h ^ e) * 1099511628211ull;
        }
        return h;
    }
};

}  // namespace slnpres
