#pragma once

#include "slnpres/groebner.hpp"
#include "slnpres/minors.hpp"
#include "slnpres/polynomial.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace slnpres {

/// The polynomial algebra F for SL_n: one variable x±_{i1..id} per sign and
/// increasing sequence, plus block first (d ascending, sequences lex
/// ascending), then the minus block. 2(2^n - 2) variables. Memoized per n.
VarTablePtr pres_vartable(int n);

VarId pres_var_id(int n, Sign sign, const IndexSeq& seq);

struct RelTag {
    enum class Kind { Plucker, Sl2 };
    Kind kind;
    // Plucker parameters
    Sign sign = Sign::Plus;
    int p = 0, q = 0;
    std::vector<int> i, j;
    // Sl2 parameter
    int d = 0;

    bool operator==(const RelTag& o) const;
};

struct TaggedRelation {
    RelTag tag;
    Polynomial poly;

    bool operator==(const TaggedRelation& o) const { return tag == o.tag && poly == o.poly; }
};

/// The spanning family of Plucker-type quadrics for fixed (sign, p, q),
/// 1 <= p <= q <= n-1: one polynomial per (i in [n]_{p-1}, j in [n]_{q+1}),
///   sum_{l=1..q+1} (-1)^l x±_{i1..i_{p-1}, j_l} x±_{j1.. omit j_l ..j_{q+1}},
/// indices normalized (signed, zero on repeats); identically-zero members
/// are dropped. Enumeration is i lex ascending, then j lex ascending.
std::vector<TaggedRelation> plucker_relations(int n, Sign sign, int p, int q);

/// Closed formula for the normalized invariant:
///   s_{w_d} = sum_{i in [n]_{n-d}} sgn(i, i*) x-_i x+_{i*}.
Polynomial sl2_relation_closed(int n, int d);

/// The same element found abstractly: the unique (up to scale) polynomial in
/// the bidegree-(w_d, w_{n-d}) component annihilated by every Chevalley
/// generator, scaled to value 1 at the identity. Throws if the solver's
/// invariant space has dimension != 1.
Polynomial sl2_relation_solve(int n, int d);

/// Dimension of that invariant space as the solver finds it.
int sl2_invariant_space_dim(int n, int d);

/// Generators-and-relations package for k[SL_n].
struct Presentation {
    int n = 0;
    VarTablePtr vartable;             // presentation variables
    VarTablePtr matrix_table;         // target coordinates x_{i,j}
    std::vector<TaggedRelation> relations;
    std::vector<Polynomial> phi;      // indexed by presentation var id; minors
    Polynomial det_relation;          // det - 1 over the matrix table

    /// phi as a substitution map, for Polynomial::substitute.
    std::unordered_map<VarId, Polynomial> phi_map() const;
    /// phi(p) for a polynomial over the presentation table.
    Polynomial apply_phi(const Polynomial& p) const;
    /// Value of phi(p) at the identity matrix: p(e,e).
    Rat identity_value(const Polynomial& p) const;

    bool operator==(const Presentation& o) const;
};

/// All Plucker families over (sign, p <= q) in fixed order, then the SL2-type
/// relations s_{w_d} - 1 for d in [n-1], plus phi and det - 1.
Presentation build_presentation(int n);

/// Row-reduces each Plucker family to a linearly independent subset
/// (greedy in enumeration order, exact rank); SL2 relations are kept as is.
Presentation reduce_relations(const Presentation& pres);

enum class EmitFormat { CanonicalJson, Text };

/// Byte-deterministic serialization. canonical-json round-trips through
/// parse; text is a human-readable listing.
std::string emit(const Presentation& pres, EmitFormat format);

/// Parses canonical-json; throws std::invalid_argument with diagnostics on
/// malformed input (undeclared variables, bad schema, syntax errors).
Presentation parse_presentation(const std::string& bytes);

}  // namespace slnpres
