#pragma once

#include "slnpres/indexseq.hpp"
#include "slnpres/polynomial.hpp"
#include "slnpres/weights.hpp"

#include <optional>
#include <unordered_map>

namespace slnpres {

/// The n x n table of coordinate functions x_{i,j}, row-major, shared and
/// memoized per n.
VarTablePtr matrix_vartable(int n);

VarId matrix_var_id(int n, int row, int col);

/// f-_{i1..id}: determinant of the submatrix on rows seq and columns 1..d.
/// f+_{i1..id}: the same on columns n-d+1..n. Exact expansion.
Polynomial minor(int n, Sign sign, const IndexSeq& seq);

/// Full n x n determinant over the matrix table.
Polynomial determinant(int n);

/// The identity matrix as an evaluation point for the matrix table.
std::unordered_map<VarId, Rat> identity_point(int n);

/// Weight of p under right translation by the diagonal torus, detected from
/// column multiplicities: x_{i,j} contributes eps_j. Returns nullopt when the
/// monomials are not all congruent modulo the all-ones vector; throws on the
/// zero polynomial.
std::optional<Weight> torus_weight_of(int n, const Polynomial& p);

}  // namespace slnpres
