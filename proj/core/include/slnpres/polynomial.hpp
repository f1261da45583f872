#pragma once

#include "slnpres/monomial.hpp"
#include "slnpres/monomial_order.hpp"
#include "slnpres/rational.hpp"
#include "slnpres/vartable.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace slnpres {

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed VarTable. Immutable value semantics: every operation returns a new
/// polynomial; stored terms never carry zero coefficients.
class Polynomial {
public:
    using TermMap = std::unordered_map<Monomial, Rat, MonomialHash>;

    Polynomial() = default;  // the zero polynomial over no table; only assignable
    explicit Polynomial(VarTablePtr table) : table_(std::move(table)) {}
    Polynomial(VarTablePtr table, TermMap terms);

    static Polynomial zero(VarTablePtr table) { return Polynomial(std::move(table)); }
    static Polynomial constant(VarTablePtr table, const Rat& c);
    static Polynomial variable(VarTablePtr table, VarId v);
    static Polynomial term(VarTablePtr table, const Rat& c, const Monomial& m);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Total degree; the zero polynomial reports 0.
    unsigned degree() const;
    Rat coefficient(const Monomial& m) const;
    /// Ids of the variables that actually occur.
    std::vector<VarId> support() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Ring-homomorphic substitution: every occurring variable must have an
    /// image; all images must share one target table. Throws otherwise.
    Polynomial substitute(const std::unordered_map<VarId, Polynomial>& images) const;

    /// Exact evaluation; every occurring variable must be assigned.
    Rat evaluate(const std::unordered_map<VarId, Rat>& point) const;

    /// Leading term with respect to an order; throws on the zero polynomial.
    std::pair<Monomial, Rat> leading_term(const MonomialOrder& order) const;

    /// Terms sorted descending in the given order (deterministic).
    std::vector<std::pair<Monomial, Rat>> sorted_terms(const MonomialOrder& order) const;

    /// Deterministic rendering: monomials descending in the order,
    /// coefficients as num/den, most significant variable first within a
    /// monomial. Equal polynomials render identically; distinct ones don't.
    std::string canonical_text(const MonomialOrder& order) const;

private:
    void add_term(const Monomial& m, const Rat& c);
    void require_same_table(const Polynomial& o, const char* op) const;

    VarTablePtr table_;
    TermMap terms_;
};

/// Monomial rendered in the table's variable names, "x^2*y" style.
std::string monomial_text(const VarTable& table, const Monomial& m);

}  // namespace slnpres
