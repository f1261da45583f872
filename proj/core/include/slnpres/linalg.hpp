#pragma once

#include "slnpres/rational.hpp"

#include <optional>
#include <vector>

namespace slnpres {

/// Dense exact rational matrix, row-major. Small sizes only: the bidegree
/// components and solver systems at desk scale stay well under 10^3 rows.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rat>(cols, Rat(0))) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return a_[r][c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r][c]; }
    void append_row(std::vector<Rat> row);
    /// Horizontal concatenation [this | other]; row counts must agree.
    RatMatrix augmented(const RatMatrix& other) const;

    /// Rank by fraction-free (Bareiss) elimination on the integer matrix
    /// obtained by clearing row denominators.
    std::size_t rank() const;

    /// Reduced row echelon form (exact rational Gauss-Jordan) and the pivot
    /// column list.
    std::pair<RatMatrix, std::vector<std::size_t>> rref() const;

    /// Basis of the right nullspace (deterministic: one vector per free
    /// column in ascending column order, free coordinate set to 1).
    std::vector<std::vector<Rat>> nullspace() const;

    /// One exact solution of A x = b, free coordinates set to 0; nullopt if
    /// inconsistent.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<Rat>> a_;
};

/// True when the column spaces coincide (rank(A) == rank(B) == rank([A|B])).
bool same_column_space(const RatMatrix& a, const RatMatrix& b);

}  // namespace slnpres
