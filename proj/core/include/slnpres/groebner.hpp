#pragma once

#include "slnpres/polynomial.hpp"

#include <vector>

namespace slnpres {

/// Reduced Groebner basis: generators monic, no term of any generator
/// divisible by the leading term of another. Generators are sorted
/// ascending by leading monomial, so equal ideals compare equal.
struct GroebnerBasis {
    std::vector<Polynomial> generators;
    MonomialOrder order = MonomialOrder::degrevlex();
    bool reduced = false;
};

/// Remainder of multivariate division of p by the basis (taken in the given
/// list order, leading terms first). No term of the result is divisible by
/// any basis leading term, and p - result lies in the generated ideal.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// S-polynomial of f and g, exposed for the post-hoc Buchberger criterion.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Buchberger's algorithm with normal pair selection (minimal lcm degree,
/// ties by pair index) and Gebauer-Moeller pair elimination; the result is
/// the reduced basis, so the output is unique for the ideal and order.
/// Zero generators are stripped; an all-zero input throws.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

/// Ideal membership via normal form against the reduced basis.
bool ideal_member(const Polynomial& p, const std::vector<Polynomial>& gens, const MonomialOrder& order);

/// Generators of the elimination ideal: the intersection of the ideal with
/// the subring on the variables NOT in drop, computed with a block order.
/// The output is the reduced Groebner basis of the elimination ideal (its
/// polynomials involve kept variables only).
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<VarId>& drop);

}  // namespace slnpres
