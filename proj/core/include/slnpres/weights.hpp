#pragma once

#include "slnpres/rational.hpp"

#include <vector>

namespace slnpres {

/// Weight of the diagonal torus of SL_n in eps-coordinates, understood
/// modulo the all-ones vector. The stored representative is canonicalized
/// to first coordinate 0, so equality is plain vector equality and the
/// fundamental-weight expansion can be read off coordinate differences.
class Weight {
public:
    Weight(int n, std::vector<long> eps_coords);

    static Weight zero(int n) { return Weight(n, std::vector<long>(n, 0)); }

    int n() const { return n_; }
    /// Canonical representative (first coordinate 0).
    const std::vector<long>& eps() const { return c_; }

    /// Coefficients in the basis of fundamental weights; integral for every
    /// weight of SL_n. Dominant iff all are >= 0.
    std::vector<long> fundamental_coeffs() const;
    bool is_dominant() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight scaled(long k) const;
    bool operator==(const Weight& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool is_zero() const;

private:
    int n_;
    std::vector<long> c_;
};

/// The fundamental weight w_d: diag(a_1..a_n) -> a_{n-d+1}...a_n,
/// i.e. eps_{n-d+1} + ... + eps_n, for 1 <= d <= n-1.
Weight fundamental_weight(int n, int d);

/// The involution star(w) = -w0(w); w0 reverses eps-coordinates, so
/// star(w_d) = w_{n-d}.
Weight weight_star(const Weight& w);

/// Root and Killing data for sl_n with B+ = lower triangular: positive
/// roots are eps_i - eps_j with i > j and sigma (their sum) has
/// eps-coordinates (1-n, 3-n, ..., n-1).
///
/// The Killing form is Phi(X,Y) = 2n tr(XY); the induced dual form on
/// weights is computed by inverting the exact Gram matrix of Phi on the
/// Cartan basis h_i = e_ii - e_{i+1,i+1}. With this normalization
/// Phi*(theta+sigma, theta) = 1 for the highest root theta (the adjoint
/// Casimir eigenvalue is 1).
class CartanData {
public:
    explicit CartanData(int n);

    int n() const { return n_; }
    Weight sigma() const;
    /// Positive roots as raw eps-coordinate vectors (eps_i - eps_j, i > j),
    /// enumerated with j ascending then i ascending.
    const std::vector<std::vector<long>>& positive_roots() const { return pos_roots_; }

    /// Dual Killing form on weight-lattice elements given by rational
    /// eps-coordinates (well defined modulo the all-ones direction).
    Rat dual_pairing(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
    Rat dual_pairing(const Weight& a, const Weight& b) const;

    /// Inverse Gram matrix of Phi on the Cartan basis (size (n-1)x(n-1)).
    const std::vector<std::vector<Rat>>& gram_inverse() const { return gram_inv_; }

private:
    int n_;
    std::vector<std::vector<long>> pos_roots_;
    std::vector<std::vector<Rat>> gram_inv_;
};

/// Dual Killing pairing of two weights (Gram-matrix route).
Rat killing_pair(int n, const Weight& a, const Weight& b);

/// c_lambda = Phi*(lambda+sigma, lambda) + Phi*(lambda*+sigma, lambda*),
/// for dominant lambda (throws otherwise).
Rat c_lambda(int n, const Weight& lambda);

/// Weyl dimension formula: prod over positive roots of
/// Phi*(lambda+rho, alpha) / Phi*(rho, alpha), rho = sigma/2.
/// Requires dominant lambda; the result is an exact positive integer.
Int weyl_dim(int n, const Weight& lambda);

}  // namespace slnpres
