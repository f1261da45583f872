#include "slnpres/weights.hpp"

#include <stdexcept>

namespace slnpres {

Weight::Weight(int n, std::vector<long> eps_coords) : n_(n), c_(std::move(eps_coords)) {
    if (n_ < 2) throw std::invalid_argument("Weight: n must be >= 2");
    if (static_cast<int>(c_.size()) != n_) throw std::invalid_argument("Weight: coordinate count != n");
    const long shift = c_[0];
    for (long& x : c_) x -= shift;
}

std::vector<long> Weight::fundamental_coeffs() const {
    // lambda = sum_d a_d w_d with w_d = eps_{n-d+1}+...+eps_n gives
    // a_d = c_{n-d+1} - c_{n-d} (1-based), d = 1..n-1.
    std::vector<long> a(n_ - 1);
    for (int d = 1; d <= n_ - 1; ++d) a[d - 1] = c_[n_ - d] - c_[n_ - d - 1];
    return a;
}

bool Weight::is_dominant() const {
    for (int i = 0; i + 1 < n_; ++i)
        if (c_[i] > c_[i + 1]) return false;
    return true;
}

Weight Weight::operator+(const Weight& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Weight: rank mismatch");
    std::vector<long> s(c_);
    for (int i = 0; i < n_; ++i) s[i] += o.c_[i];
    return Weight(n_, std::move(s));
}

Weight Weight::operator-(const Weight& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Weight: rank mismatch");
    std::vector<long> s(c_);
    for (int i = 0; i < n_; ++i) s[i] -= o.c_[i];
    return Weight(n_, std::move(s));
}

Weight Weight::scaled(long k) const {
    std::vector<long> s(c_);
    for (long& x : s) x *= k;
    return Weight(n_, std::move(s));
}

bool Weight::is_zero() const {
    for (long x : c_)
        if (x != 0) return false;
    return true;
}

Weight fundamental_weight(int n, int d) {
    if (d < 1 || d > n - 1) throw std::invalid_argument("fundamental_weight: d out of range [1,n-1]");
    std::vector<long> c(n, 0);
    for (int i = n - d; i < n; ++i) c[i] = 1;
    return Weight(n, std::move(c));
}

Weight weight_star(const Weight& w) {
    std::vector<long> c(w.n());
    const auto& e = w.eps();
    for (int i = 0; i < w.n(); ++i) c[i] = -e[w.n() - 1 - i];
    return Weight(w.n(), std::move(c));
}

CartanData::CartanData(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("CartanData: n must be >= 2");
    for (int j = 1; j <= n; ++j)
        for (int i = j + 1; i <= n; ++i) {
            std::vector<long> r(n, 0);
            r[i - 1] = 1;
            r[j - 1] = -1;
            pos_roots_.push_back(std::move(r));
        }

    // Gram matrix of Phi(X,Y) = 2n tr(XY) on h_i = e_ii - e_{i+1,i+1}:
    // tr(h_i h_j) = 2, -1, 0 for |i-j| = 0, 1, >1.
    const int m = n - 1;
    std::vector<std::vector<Rat>> g(m, std::vector<Rat>(m, Rat(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int tr = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
            g[i][j] = Rat(2L * n * tr);
        }

    // invert by Gauss-Jordan; the matrix is positive definite
    gram_inv_.assign(m, std::vector<Rat>(m, Rat(0)));
    for (int i = 0; i < m; ++i) gram_inv_[i][i] = 1;
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int r = col; r < m; ++r)
            if (g[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("CartanData: singular Gram matrix");
        std::swap(g[piv], g[col]);
        std::swap(gram_inv_[piv], gram_inv_[col]);
        Rat d = g[col][col];
        for (int c = 0; c < m; ++c) {
            g[col][c] /= d;
            gram_inv_[col][c] /= d;
        }
        for (int r = 0; r < m; ++r) {
            if (r == col || g[r][col] == 0) continue;
            Rat f = g[r][col];
            for (int c = 0; c < m; ++c) {
                g[r][c] -= f * g[col][c];
                gram_inv_[r][c] -= f * gram_inv_[col][c];
            }
        }
    }
}

Weight CartanData::sigma() const {
    std::vector<long> s(n_, 0);
    for (const auto& r : pos_roots_)
        for (int i = 0; i < n_; ++i) s[i] += r[i];
    return Weight(n_, std::move(s));
}

Rat CartanData::dual_pairing(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    if (static_cast<int>(a.size()) != n_ || static_cast<int>(b.size()) != n_)
        throw std::invalid_argument("dual_pairing: coordinate count != n");
    // Value of a weight on h_i is c_i - c_{i+1}; pair through the inverse Gram.
    const int m = n_ - 1;
    std::vector<Rat> va(m), vb(m);
    for (int i = 0; i < m; ++i) {
        va[i] = a[i] - a[i + 1];
        vb[i] = b[i] - b[i + 1];
    }
    Rat total(0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) total += va[i] * gram_inv_[i][j] * vb[j];
    return total;
}

Rat CartanData::dual_pairing(const Weight& a, const Weight& b) const {
    std::vector<Rat> ra(n_), rb(n_);
    for (int i = 0; i < n_; ++i) {
        ra[i] = Rat(a.eps()[i]);
        rb[i] = Rat(b.eps()[i]);
    }
    return dual_pairing(ra, rb);
}

Rat killing_pair(int n, const Weight& a, const Weight& b) {
    if (a.n() != n || b.n() != n) throw std::invalid_argument("killing_pair: rank mismatch");
    return CartanData(n).dual_pairing(a, b);
}

Rat c_lambda(int n, const Weight& lambda) {
    if (lambda.n() != n) throw std::invalid_argument("c_lambda: rank mismatch");
    if (!lambda.is_dominant()) throw std::invalid_argument("c_lambda: lambda not dominant");
    CartanData cd(n);
    Weight sig = cd.sigma();
    Weight star = weight_star(lambda);
    return cd.dual_pairing(lambda + sig, lambda) + cd.dual_pairing(star + sig, star);
}

Int weyl_dim(int n, const Weight& lambda) {
    if (lambda.n() != n) throw std::invalid_argument("weyl_dim: rank mismatch");
    if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dim: lambda not dominant");
    CartanData cd(n);
    Weight sig = cd.sigma();

    // rho = sigma/2; project lambda+rho and rho to trace-zero representatives
    // so the center direction never enters the pairing.
    auto traceless = [&](const Weight& w, const Rat& half_shift) {
        std::vector<Rat> v(n);
        Rat mean(0);
        for (int i = 0; i < n; ++i) {
            v[i] = Rat(w.eps()[i]) + half_shift * Rat(sig.eps()[i]);
            mean += v[i];
        }
        mean /= n;
        for (auto& x : v) x -= mean;
        return v;
    };
    std::vector<Rat> lam_rho = traceless(lambda, Rat(1, 2));
    std::vector<Rat> rho = traceless(Weight::zero(n), Rat(1, 2));

    Rat result(1);
    for (const auto& alpha : cd.positive_roots()) {
        std::vector<Rat> ar(n);
        for (int i = 0; i < n; ++i) ar[i] = Rat(alpha[i]);
        result *= cd.dual_pairing(lam_rho, ar) / cd.dual_pairing(rho, ar);
    }
    if (result.get_den() != 1 || result <= 0)
        throw std::logic_error("weyl_dim: non-integral result");
    return result.get_num();
}

}  // namespace slnpres
