#pragma once

#include "slnpres/polynomial.hpp"
#include "slnpres/weights.hpp"

#include <map>
#include <vector>

namespace slnpres {

/// Element of sl_n: an n x n rational matrix with exact trace 0.
class LieElt {
public:
    LieElt(int n, std::vector<std::vector<Rat>> entries);

    static LieElt elementary(int n, int a, int b);  // e_{ab}, a != b
    static LieElt cartan(int n, int i);             // h_i = e_ii - e_{i+1,i+1}
    /// e_{a,a+1} and e_{a+1,a} for a in [n-1]; they generate sl_n.
    static std::vector<LieElt> chevalley_generators(int n);

    int n() const { return n_; }
    const Rat& entry(int i, int j) const { return m_[i - 1][j - 1]; }  // 1-based

    LieElt operator+(const LieElt& o) const;
    LieElt scaled(const Rat& c) const;
    /// Matrix commutator XY - YX.
    LieElt commutator(const LieElt& o) const;
    bool operator==(const LieElt& o) const { return n_ == o.n_ && m_ == o.m_; }

private:
    int n_;
    std::vector<std::vector<Rat>> m_;
};

/// Killing form Phi(X,Y) = 2n tr(XY).
Rat killing_form(const LieElt& x, const LieElt& y);

/// A basis of sl_n together with its exact Killing-dual basis:
/// Phi(basis[i], dual[j]) = delta_ij.
struct DualBasisPair {
    std::vector<LieElt> basis;
    std::vector<LieElt> dual;
};

/// Standard pair: off-diagonal e_{ab} (dual e_{ba}/2n) and the Cartan
/// elements h_i (duals from the inverted Gram matrix).
DualBasisPair dual_bases(int n);

/// The Killing-dual of an arbitrary basis, via inversion of its full Gram
/// matrix. Used to pin basis-independence of the Casimir operators.
DualBasisPair dual_bases_for(std::vector<LieElt> basis);

/// Derivation of the left-translation action on matrix coordinates:
/// X . x_{i,j} = -sum_k X_{i,k} x_{k,j}, extended by Leibniz.
Polynomial act_matrix(const LieElt& x, const Polynomial& p);

/// The same action on presentation variables, by row replacement:
/// X . x±_{i1..id} = -sum_r sum_k X_{i_r,k} normalize(x±_{i1..k..id}).
/// Preserves the (sign, length)-multidegree.
Polynomial act_pres(const LieElt& x, const Polynomial& p);

/// act_pres restricted to one tensor leg: variables with leg[id] == false
/// are treated as constants by the derivation.
Polynomial act_pres_leg(const LieElt& x, const Polynomial& p, const std::vector<bool>& leg);

/// Marks which variables of a presentation table form the F+ tensor leg.
struct TensorSplit {
    std::vector<bool> plus_leg;  // indexed by var id

    static TensorSplit by_sign(const VarTable& table);
    std::vector<bool> minus_leg() const;
};

/// Multidegree of a monomial over a presentation table, keyed by
/// (sign, sequence length); the N^(n-1) x N^(n-1) grading of F.
std::map<std::pair<int, int>, unsigned> pres_multidegree(const VarTable& table, const Monomial& m);

/// True when all monomials of p share one multidegree.
bool is_multihomogeneous(const Polynomial& p);

/// The mixed Casimir operator sum_i (x_i (x) x_i* + x_i* (x) x_i) with the
/// first factor acting through the plus leg and the second through the minus
/// leg. Requires p multihomogeneous (fails fast on mixed degrees).
Polynomial casimir_delta(int n, const Polynomial& p, const TensorSplit& split);
Polynomial casimir_delta(const DualBasisPair& bases, const Polynomial& p, const TensorSplit& split);

enum class VarSpace { MatrixVars, PresVars };

/// Infinitesimal invariance test: e_{a,a+1} and e_{a+1,a} annihilate p for
/// every a in [n-1]. Valid over characteristic 0 for connected G.
bool is_invariant(int n, const Polynomial& p, VarSpace space);

}  // namespace slnpres
