#include "slnpres/linalg.hpp"

#include <stdexcept>

namespace slnpres {

void RatMatrix::append_row(std::vector<Rat> row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("RatMatrix::append_row: width mismatch");
    a_.push_back(std::move(row));
    ++rows_;
}

RatMatrix RatMatrix::augmented(const RatMatrix& other) const {
    if (other.rows_ != rows_) throw std::invalid_argument("RatMatrix::augmented: row count mismatch");
    RatMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.a_[r][c] = a_[r][c];
        for (std::size_t c = 0; c < other.cols_; ++c) out.a_[r][cols_ + c] = other.a_[r][c];
    }
    return out;
}

std::size_t RatMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    // Clear denominators per row (row scaling preserves rank), then run
    // one-step fraction-free Bareiss: entries stay integral, divisions exact.
    std::vector<std::vector<Int>> m(rows_, std::vector<Int>(cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
        Int lcm(1);
        for (std::size_t c = 0; c < cols_; ++c) {
            Int den = a_[r][c].get_den();
            lcm = lcm / gcd(lcm, den) * den;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            Rat scaled = a_[r][c] * Rat(lcm);
            m[r][c] = scaled.get_num();
        }
    }

    std::size_t rank = 0;
    Int prev(1);
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t piv = rank;
        while (piv < rows_ && m[piv][col] == 0) ++piv;
        if (piv == rows_) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            for (std::size_t c = col + 1; c < cols_; ++c) {
                Int t = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[r][c] = std::move(t);
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

std::pair<RatMatrix, std::vector<std::size_t>> RatMatrix::rref() const {
    RatMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = row;
        while (piv < rows_ && m.a_[piv][col] == 0) ++piv;
        if (piv == rows_) continue;
        std::swap(m.a_[piv], m.a_[row]);
        Rat d = m.a_[row][col];
        for (std::size_t c = col; c < cols_; ++c) m.a_[row][c] /= d;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || m.a_[r][col] == 0) continue;
            Rat f = m.a_[r][col];
            for (std::size_t c = col; c < cols_; ++c) m.a_[r][c] -= f * m.a_[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::vector<std::vector<Rat>> RatMatrix::nullspace() const {
    auto [r, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.a_[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> RatMatrix::solve(const std::vector<Rat>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("RatMatrix::solve: rhs size mismatch");
    RatMatrix rhs(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) rhs.a_[r][0] = b[r];
    auto [m, pivots] = augmented(rhs).rref();
    for (std::size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] == cols_) return std::nullopt;  // pivot in the rhs column
    std::vector<Rat> x(cols_, Rat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m.a_[k][cols_];
    return x;
}

bool same_column_space(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("same_column_space: row count mismatch");
    std::size_t ra = a.rank();
    std::size_t rb = b.rank();
    if (ra != rb) return false;
    return a.augmented(b).rank() == ra;
}

}  // namespace slnpres
