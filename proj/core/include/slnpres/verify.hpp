#pragma once

#include "slnpres/presentation.hpp"

#include <map>
#include <string>
#include <vector>

namespace slnpres {

/// Machine-readable outcome of one theorem-level check. Serialization is
/// deterministic up to the timing field; a failing report always carries an
/// exact witness.
struct VerificationReport {
    enum class Verdict { Pass, Fail, Skipped };

    std::string check;
    std::map<std::string, std::string> params;
    Verdict verdict = Verdict::Skipped;
    std::string reason;   // skip reason
    std::string witness;  // exact payload: offending relation, found preimage, ...
    double time_ms = 0.0;

    bool passed() const { return verdict == Verdict::Pass; }
    bool failed() const { return verdict == Verdict::Fail; }
    /// One JSON object per line; keys sorted, timing included.
    std::string json_line() const;
};

/// Every relation maps to 0 under phi modulo (det - 1).
VerificationReport check_relations_vanish(const Presentation& pres);

/// The elimination ideal of the graph of phi together with det - 1 equals
/// the ideal generated by the emitted relations, as reduced Groebner bases
/// over the presentation subring.
VerificationReport check_kernel_equality(const Presentation& pres);

/// dim F±_{p,q} - rank(Plucker family in bidegree (p,q)) equals
/// weyl_dim(w_p + w_q).
VerificationReport check_bidegree_dims(const Presentation& pres, Sign sign, int p, int q);

/// The image of the mixed Casimir minus 2 Phi*(w_p*, w_q*) id on the
/// bidegree-(p,q) component equals the span of the Plucker family there.
VerificationReport check_kernel_projector(const Presentation& pres, Sign sign, int p, int q);

/// casimir_delta(s_{w_d}) = -c_{w_d} s_{w_d} and s(e,e) = 1.
VerificationReport check_casimir(const Presentation& pres, int d);

/// Every product prod_d (s_{w_d} - 1)^{a_d} with 0 < sum a_d <= maxdeg is
/// invariant and lies in ker phi.
VerificationReport check_invariant_monomials(const Presentation& pres, int maxdeg);

/// Degree-bounded exact linear solve for a preimage of x_{i,j} under phi
/// modulo (det - 1); skipped when the bound is insufficient.
VerificationReport check_surjectivity(const Presentation& pres, int i, int j, int degree_bound);

struct SuiteCaps {
    int max_n_linalg = 4;    // linear-algebra checks run for n <= this
    int max_n_elim = 2;      // kernel equality runs unconditionally for n <= this
    bool allow_expensive = false;  // enables kernel equality for n = 3
    int surjectivity_bound = 2;
    int max_n_surjectivity = 3;
    int invariant_maxdeg = 2;
};

/// Names accepted in a suite selection, in execution order.
const std::vector<std::string>& suite_check_names();

/// Runs the selected checks (all when the selection is empty) with resource
/// caps; report order is deterministic. Unknown names throw with the list of
/// valid ones.
std::vector<VerificationReport> run_suite(int n, const std::vector<std::string>& selection, const SuiteCaps& caps);

}  // namespace slnpres
