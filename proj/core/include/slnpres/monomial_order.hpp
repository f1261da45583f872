#pragma once

#include "slnpres/monomial.hpp"

#include <vector>

namespace slnpres {

/// Total multiplicative monomial order. Variable ids ascend in significance:
/// the variable with the highest id is the greatest. degrevlex breaks degree
/// ties at the least-significant (lowest id) end: the monomial with the
/// smaller exponent at the first differing low id is the greater one.
///
/// The block kind realizes elimination: any monomial containing an
/// eliminate-block variable ranks above every monomial that contains none;
/// within each block the comparison is degrevlex.
class MonomialOrder {
public:
    enum class Kind { Lex, DegRevLex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
    /// Block order eliminating the given variable ids (degrevlex within
    /// each block). nvars is the size of the variable table.
    static MonomialOrder block(std::size_t nvars, const std::vector<VarId>& eliminate);

    Kind kind() const { return kind_; }
    bool is_block() const { return kind_ == Kind::Block; }
    bool eliminates(VarId v) const { return kind_ == Kind::Block && v < elim_.size() && elim_[v]; }

    /// Three-way comparison: negative if a < b, 0 if equal, positive if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && elim_ == o.elim_; }

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<bool> elim_;  // block kind only; indexed by var id
};

}  // namespace slnpres
