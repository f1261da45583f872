#include "slnpres/verify.hpp"

#include "slnpres/lie.hpp"
#include "slnpres/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace slnpres {

namespace {

const MonomialOrder kOrder = MonomialOrder::degrevlex();

std::string poly_text(const Polynomial& p) { return p.canonical_text(kOrder); }

VerificationReport make_report(std::string check, std::map<std::string, std::string> params) {
    VerificationReport r;
    r.check = std::move(check);
    r.params = std::move(params);
    return r;
}

void pass(VerificationReport& r, std::string witness = {}) {
    r.verdict = VerificationReport::Verdict::Pass;
    r.witness = std::move(witness);
}

void fail(VerificationReport& r, std::string witness) {
    r.verdict = VerificationReport::Verdict::Fail;
    r.witness = std::move(witness);
}

void skip(VerificationReport& r, std::string reason) {
    r.verdict = VerificationReport::Verdict::Skipped;
    r.reason = std::move(reason);
}

std::string tag_text(const RelTag& tag) {
    if (tag.kind == RelTag::Kind::Sl2) return "sl2 d=" + std::to_string(tag.d);
    std::string t = "plucker ";
    t += sign_char(tag.sign);
    t += " p=" + std::to_string(tag.p) + " q=" + std::to_string(tag.q) + " i=(";
    for (size_t k = 0; k < tag.i.size(); ++k) t += (k ? "," : "") + std::to_string(tag.i[k]);
    t += ") j=(";
    for (size_t k = 0; k < tag.j.size(); ++k) t += (k ? "," : "") + std::to_string(tag.j[k]);
    t += ")";
    return t;
}

// Combined table for the graph-ideal elimination: presentation variables as
// a prefix (ids unchanged), matrix variables appended above them.
VarTablePtr combined_table(int n) {
    static std::mutex mu;
    static std::map<int, VarTablePtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<VarDesc> vars;
    VarTablePtr pres = pres_vartable(n);
    VarTablePtr mat = matrix_vartable(n);
    for (VarId v = 0; v < pres->size(); ++v) vars.push_back(pres->desc(v));
    for (VarId v = 0; v < mat->size(); ++v) vars.push_back(mat->desc(v));
    auto table = VarTable::make(std::move(vars));
    cache.emplace(n, table);
    return table;
}

Polynomial shift_vars(const Polynomial& p, const VarTablePtr& target, VarId offset) {
    Polynomial::TermMap terms;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> es;
        for (const auto& [v, e] : m.entries()) es.emplace_back(v + offset, e);
        terms.emplace(Monomial(std::move(es)), c);
    }
    return Polynomial(target, std::move(terms));
}

// Monomial basis of the bidegree-(e_p + e_q) component of F± for one sign.
std::vector<Monomial> bidegree_basis(int n, Sign sign, int p, int q) {
    std::vector<VarId> block_p, block_q;
    for (const IndexSeq& s : all_index_seqs(n, p)) block_p.push_back(pres_var_id(n, sign, s));
    for (const IndexSeq& s : all_index_seqs(n, q)) block_q.push_back(pres_var_id(n, sign, s));
    std::vector<Monomial> basis;
    if (p == q) {
        for (size_t a = 0; a < block_p.size(); ++a)
            for (size_t b = a; b < block_p.size(); ++b)
                basis.push_back(a == b ? Monomial({{block_p[a], 2}})
                                       : Monomial({{block_p[a], 1}, {block_p[b], 1}}));
    } else {
        for (VarId a : block_p)
            for (VarId b : block_q) basis.push_back(Monomial({{a, 1}, {b, 1}}));
    }
    return basis;
}

// Coordinate matrix of a list of polynomials in a fixed monomial basis
// (columns = polynomials). Throws if a polynomial leaves the span.
RatMatrix coordinate_columns(const std::vector<Monomial>& basis, const std::vector<Polynomial>& polys) {
    std::map<Monomial, size_t, std::function<bool(const Monomial&, const Monomial&)>> index(
        [](const Monomial& a, const Monomial& b) { return kOrder.less(a, b); });
    for (size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
    RatMatrix m(basis.size(), polys.size());
    for (size_t c = 0; c < polys.size(); ++c)
        for (const auto& [mono, coef] : polys[c].terms()) {
            auto it = index.find(mono);
            if (it == index.end()) throw std::logic_error("coordinate_columns: monomial outside the component");
            m.at(it->second, c) = coef;
        }
    return m;
}

std::vector<Polynomial> plucker_family_of(const Presentation& pres, Sign sign, int p, int q) {
    std::vector<Polynomial> fam;
    for (const auto& rel : pres.relations)
        if (rel.tag.kind == RelTag::Kind::Plucker && rel.tag.sign == sign && rel.tag.p == p && rel.tag.q == q)
            fam.push_back(rel.poly);
    return fam;
}

const TaggedRelation* sl2_relation_of(const Presentation& pres, int d) {
    for (const auto& rel : pres.relations)
        if (rel.tag.kind == RelTag::Kind::Sl2 && rel.tag.d == d) return &rel;
    return nullptr;
}

// Degree-bounded monomial enumeration over a table, degree ascending, then
// lexicographic in non-decreasing variable lists. Deterministic.
void enumerate_monomials(const VarTablePtr& table, int bound, std::vector<Monomial>& out) {
    std::vector<Monomial::Entry> current;
    std::function<void(VarId, int)> gen = [&](VarId start, int remaining) {
        out.push_back(Monomial(current));
        if (remaining == 0) return;
        for (VarId v = start; v < table->size(); ++v) {
            if (!current.empty() && current.back().first == v)
                ++current.back().second;
            else
                current.emplace_back(v, 1);
            gen(v, remaining - 1);
            if (current.back().second > 1)
                --current.back().second;
            else
                current.pop_back();
        }
    };
    gen(0, bound);
    std::stable_sort(out.begin(), out.end(),
                     [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
}

}  // namespace

std::string VerificationReport::json_line() const {
    nlohmann::json j;
    j["check"] = check;
    nlohmann::json params_json;
    for (const auto& [k, v] : params) params_json[k] = v;
    j["params"] = std::move(params_json);
    switch (verdict) {
        case Verdict::Pass: j["verdict"] = "pass"; break;
        case Verdict::Fail: j["verdict"] = "fail"; break;
        case Verdict::Skipped: j["verdict"] = "skipped"; break;
    }
    if (!reason.empty()) j["reason"] = reason;
    if (!witness.empty()) j["witness"] = witness;
    j["time_ms"] = time_ms;
    return j.dump();
}

VerificationReport check_relations_vanish(const Presentation& pres) {
    auto report = make_report("relations-vanish", {{"n", std::to_string(pres.n)}});
    const std::vector<Polynomial> modulus{pres.det_relation};
    for (const auto& rel : pres.relations) {
        Polynomial residue = normal_form(pres.apply_phi(rel.poly), modulus, kOrder);
        if (!residue.is_zero()) {
            fail(report, tag_text(rel.tag) + ": phi-image reduces to " + poly_text(residue));
            return report;
        }
    }
    pass(report);
    return report;
}

VerificationReport check_kernel_equality(const Presentation& pres) {
    const int n = pres.n;
    auto report = make_report("kernel-equality", {{"n", std::to_string(n)}});

    VarTablePtr combined = combined_table(n);
    const VarId offset = static_cast<VarId>(pres.vartable->size());
    std::vector<VarId> drop;
    for (VarId v = 0; v < pres.matrix_table->size(); ++v) drop.push_back(offset + v);

    std::vector<Polynomial> graph;
    for (VarId v = 0; v < pres.vartable->size(); ++v)
        graph.push_back(Polynomial::variable(combined, v) - shift_vars(pres.phi[v], combined, offset));
    graph.push_back(shift_vars(pres.det_relation, combined, offset));

    std::vector<Polynomial> eliminated = eliminate(graph, drop);
    // restrict to the presentation table (ids are a prefix of the combined table)
    std::vector<Polynomial> kernel_side;
    for (const auto& g : eliminated) {
        Polynomial::TermMap terms;
        for (const auto& [m, c] : g.terms()) terms.emplace(m, c);
        kernel_side.push_back(Polynomial(pres.vartable, std::move(terms)));
    }

    std::vector<Polynomial> rels;
    for (const auto& rel : pres.relations) rels.push_back(rel.poly);
    std::vector<Polynomial> relation_side = buchberger(rels, kOrder).generators;

    if (kernel_side.size() != relation_side.size()) {
        fail(report, "basis sizes differ: eliminated " + std::to_string(kernel_side.size()) + ", relations " +
                         std::to_string(relation_side.size()));
        return report;
    }
    for (size_t k = 0; k < kernel_side.size(); ++k) {
        if (kernel_side[k] != relation_side[k]) {
            fail(report, "bases differ at element " + std::to_string(k) + ": eliminated " +
                             poly_text(kernel_side[k]) + " vs relations " + poly_text(relation_side[k]));
            return report;
        }
    }
    pass(report, kernel_side.empty() ? std::string{} : poly_text(kernel_side[0]));
    return report;
}

VerificationReport check_bidegree_dims(const Presentation& pres, Sign sign, int p, int q) {
    const int n = pres.n;
    auto report = make_report("bidegree-dims", {{"n", std::to_string(n)},
                                                {"sign", std::string(1, sign_char(sign))},
                                                {"p", std::to_string(p)},
                                                {"q", std::to_string(q)}});
    std::vector<Monomial> basis = bidegree_basis(n, sign, p, q);
    std::vector<Polynomial> family = plucker_family_of(pres, sign, p, q);
    const std::size_t rank = family.empty() ? 0 : coordinate_columns(basis, family).rank();
    const Int expected = weyl_dim(n, fundamental_weight(n, p) + fundamental_weight(n, q));
    const Int actual = Int(basis.size()) - Int(rank);

    report.params["dim"] = std::to_string(basis.size());
    report.params["rank"] = std::to_string(rank);
    report.params["weyl_dim"] = expected.get_str();
    if (actual == expected)
        pass(report);
    else
        fail(report, "dim - rank = " + actual.get_str() + " but weyl_dim = " + expected.get_str());
    return report;
}

VerificationReport check_kernel_projector(const Presentation& pres, Sign sign, int p, int q) {
    const int n = pres.n;
    auto report = make_report("kernel-projector", {{"n", std::to_string(n)},
                                                   {"sign", std::string(1, sign_char(sign))},
                                                   {"p", std::to_string(p)},
                                                   {"q", std::to_string(q)}});
    const VarTablePtr table = pres.vartable;
    const DualBasisPair bases = dual_bases(n);
    CartanData cartan(n);
    const Rat shift = Rat(2) * cartan.dual_pairing(weight_star(fundamental_weight(n, p)),
                                                   weight_star(fundamental_weight(n, q)));

    // linear action on single variables, cached
    std::map<std::pair<size_t, VarId>, Polynomial> var_image;
    auto image = [&](size_t which, const LieElt& x, VarId v) -> const Polynomial& {
        auto key = std::make_pair(which, v);
        auto it = var_image.find(key);
        if (it == var_image.end()) it = var_image.emplace(key, act_pres(x, Polynomial::variable(table, v))).first;
        return it->second;
    };

    std::vector<Monomial> basis = bidegree_basis(n, sign, p, q);
    std::vector<Polynomial> images;
    for (const Monomial& m : basis) {
        // split the degree-2 monomial into its block-p and block-q factors
        VarId a, b;
        if (m.entries().size() == 1) {
            a = b = m.entries()[0].first;
        } else {
            VarId u = m.entries()[0].first, w = m.entries()[1].first;
            int du = std::get<PresVar>(table->desc(u)).seq.length();
            if (du == p) {
                a = u;
                b = w;
            } else {
                a = w;
                b = u;
            }
        }
        Polynomial total(table);
        for (size_t s = 0; s < bases.basis.size(); ++s) {
            const Polynomial& xa = image(2 * s, bases.basis[s], a);
            const Polynomial& xsb = image(2 * s + 1, bases.dual[s], b);
            const Polynomial& xsa = image(2 * s + 1, bases.dual[s], a);
            const Polynomial& xb = image(2 * s, bases.basis[s], b);
            total = total + xa * xsb + xsa * xb;
        }
        total = total - Polynomial::term(table, shift, m);
        images.push_back(std::move(total));
    }

    RatMatrix operator_image = coordinate_columns(basis, images);
    std::vector<Polynomial> family = plucker_family_of(pres, sign, p, q);
    RatMatrix plucker_span = family.empty() ? RatMatrix(basis.size(), 0) : coordinate_columns(basis, family);

    report.params["operator_rank"] = std::to_string(operator_image.rank());
    report.params["plucker_rank"] = std::to_string(plucker_span.rank());
    if (same_column_space(operator_image, plucker_span))
        pass(report);
    else
        fail(report, "operator image differs from the Plucker span (ranks " +
                         std::to_string(operator_image.rank()) + " vs " + std::to_string(plucker_span.rank()) + ")");
    return report;
}

VerificationReport check_casimir(const Presentation& pres, int d) {
    const int n = pres.n;
    auto report = make_report("casimir", {{"n", std::to_string(n)}, {"d", std::to_string(d)}});
    const TaggedRelation* rel = sl2_relation_of(pres, d);
    if (rel == nullptr) {
        fail(report, "presentation has no sl2 relation for d=" + std::to_string(d));
        return report;
    }
    Polynomial s = rel->poly + Polynomial::constant(pres.vartable, 1);
    const Rat c = c_lambda(n, fundamental_weight(n, d));
    report.params["c_lambda"] = rat_to_string(c);

    Polynomial delta = casimir_delta(n, s, TensorSplit::by_sign(*pres.vartable));
    Polynomial expected = s.scaled(-c);
    if (delta != expected) {
        fail(report, "delta(s) - (-c s) = " + poly_text(delta - expected));
        return report;
    }
    const Rat at_identity = pres.identity_value(s);
    if (at_identity != 1) {
        fail(report, "s(e,e) = " + rat_to_string(at_identity));
        return report;
    }
    pass(report);
    return report;
}

VerificationReport check_invariant_monomials(const Presentation& pres, int maxdeg) {
    const int n = pres.n;
    auto report =
        make_report("invariant-monomials", {{"n", std::to_string(n)}, {"maxdeg", std::to_string(maxdeg)}});
    std::vector<Polynomial> gens;  // s_{w_d} - 1
    for (int d = 1; d <= n - 1; ++d) {
        const TaggedRelation* rel = sl2_relation_of(pres, d);
        if (rel == nullptr) {
            fail(report, "presentation has no sl2 relation for d=" + std::to_string(d));
            return report;
        }
        gens.push_back(rel->poly);
    }
    const std::vector<Polynomial> modulus{pres.det_relation};

    std::vector<int> exps(gens.size(), 0);
    std::function<bool(size_t, int)> walk = [&](size_t idx, int used) -> bool {
        if (idx == gens.size()) {
            if (used == 0) return true;
            Polynomial t = Polynomial::constant(pres.vartable, 1);
            for (size_t k = 0; k < gens.size(); ++k)
                if (exps[k] > 0) t = t * gens[k].pow(static_cast<unsigned>(exps[k]));
            std::string label;
            for (size_t k = 0; k < gens.size(); ++k) label += (k ? "," : "") + std::to_string(exps[k]);
            if (!is_invariant(n, t, VarSpace::PresVars)) {
                fail(report, "product with exponents (" + label + ") is not invariant");
                return false;
            }
            if (!normal_form(pres.apply_phi(t), modulus, kOrder).is_zero()) {
                fail(report, "product with exponents (" + label + ") is not in ker phi");
                return false;
            }
            return true;
        }
        for (int e = 0; used + e <= maxdeg; ++e) {
            exps[idx] = e;
            if (!walk(idx + 1, used + e)) return false;
        }
        exps[idx] = 0;
        return true;
    };
    if (walk(0, 0)) pass(report);
    return report;
}

VerificationReport check_surjectivity(const Presentation& pres, int i, int j, int degree_bound) {
    const int n = pres.n;
    auto report = make_report("surjectivity", {{"n", std::to_string(n)},
                                               {"i", std::to_string(i)},
                                               {"j", std::to_string(j)},
                                               {"bound", std::to_string(degree_bound)}});
    if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("check_surjectivity: entry out of range");

    std::vector<Monomial> candidates;
    enumerate_monomials(pres.vartable, degree_bound, candidates);

    const std::vector<Polynomial> modulus{pres.det_relation};
    std::vector<Polynomial> reduced_images;
    reduced_images.reserve(candidates.size());
    auto phi = pres.phi_map();
    for (const Monomial& m : candidates) {
        Polynomial image = Polynomial::term(pres.vartable, Rat(1), m).substitute(phi);
        reduced_images.push_back(normal_form(image, modulus, kOrder));
    }

    Polynomial target = Polynomial::variable(pres.matrix_table, matrix_var_id(n, i, j));

    std::map<Monomial, size_t, std::function<bool(const Monomial&, const Monomial&)>> rows(
        [](const Monomial& a, const Monomial& b) { return kOrder.less(a, b); });
    for (const auto& p : reduced_images)
        for (const auto& [m, c] : p.terms()) rows.emplace(m, 0);
    for (const auto& [m, c] : target.terms()) rows.emplace(m, 0);
    size_t next = 0;
    for (auto& [m, idx] : rows) idx = next++;

    RatMatrix system(rows.size(), candidates.size());
    for (size_t c = 0; c < reduced_images.size(); ++c)
        for (const auto& [m, coef] : reduced_images[c].terms()) system.at(rows.at(m), c) = coef;
    std::vector<Rat> rhs(rows.size(), Rat(0));
    for (const auto& [m, coef] : target.terms()) rhs[rows.at(m)] = coef;

    auto solution = system.solve(rhs);
    if (!solution) {
        skip(report, "no preimage within degree bound " + std::to_string(degree_bound));
        return report;
    }
    Polynomial preimage(pres.vartable);
    for (size_t c = 0; c < candidates.size(); ++c)
        if ((*solution)[c] != 0)
            preimage = preimage + Polynomial::term(pres.vartable, (*solution)[c], candidates[c]);

    // verify the witness exactly before reporting it
    Polynomial residue = normal_form(pres.apply_phi(preimage) - target, modulus, kOrder);
    if (!residue.is_zero()) {
        fail(report, "solver returned a non-preimage; residue " + poly_text(residue));
        return report;
    }
    pass(report, poly_text(preimage));
    return report;
}

const std::vector<std::string>& suite_check_names() {
    static const std::vector<std::string> names{
        "relations-vanish", "kernel-equality", "bidegree-dims", "kernel-projector",
        "casimir",          "invariant-monomials", "surjectivity"};
    return names;
}

std::vector<VerificationReport> run_suite(int n, const std::vector<std::string>& selection, const SuiteCaps& caps) {
    std::vector<std::string> selected = selection.empty() ? suite_check_names() : selection;
    for (const auto& name : selected) {
        if (std::find(suite_check_names().begin(), suite_check_names().end(), name) == suite_check_names().end()) {
            std::string valid;
            for (const auto& v : suite_check_names()) valid += (valid.empty() ? "" : ", ") + v;
            throw std::invalid_argument("unknown check '" + name + "'; valid checks: " + valid);
        }
    }

    const Presentation pres = build_presentation(n);
    std::vector<VerificationReport> reports;
    auto timed = [&reports](std::function<VerificationReport()> f) {
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport r = f();
        auto t1 = std::chrono::steady_clock::now();
        r.time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        reports.push_back(std::move(r));
    };
    auto wants = [&selected](const std::string& name) {
        return std::find(selected.begin(), selected.end(), name) != selected.end();
    };

    if (wants("relations-vanish")) {
        if (n <= caps.max_n_linalg)
            timed([&] { return check_relations_vanish(pres); });
        else {
            auto r = make_report("relations-vanish", {{"n", std::to_string(n)}});
            skip(r, "n exceeds cap " + std::to_string(caps.max_n_linalg));
            reports.push_back(std::move(r));
        }
    }
    if (wants("kernel-equality")) {
        const bool runnable = n <= caps.max_n_elim || (caps.allow_expensive && n <= 3);
        if (runnable)
            timed([&] { return check_kernel_equality(pres); });
        else {
            auto r = make_report("kernel-equality", {{"n", std::to_string(n)}});
            skip(r, n <= 3 ? "expensive; pass --allow-expensive to run" : "elimination capped at n <= 3");
            reports.push_back(std::move(r));
        }
    }
    if (wants("bidegree-dims")) {
        for (Sign sign : {Sign::Plus, Sign::Minus})
            for (int p = 1; p <= n - 1; ++p)
                for (int q = p; q <= n - 1; ++q) {
                    if (n <= caps.max_n_linalg)
                        timed([&] { return check_bidegree_dims(pres, sign, p, q); });
                }
    }
    if (wants("kernel-projector")) {
        for (Sign sign : {Sign::Plus, Sign::Minus})
            for (int p = 1; p <= n - 1; ++p)
                for (int q = p; q <= n - 1; ++q) {
                    if (n <= caps.max_n_linalg)
                        timed([&] { return check_kernel_projector(pres, sign, p, q); });
                }
    }
    if (wants("casimir")) {
        for (int d = 1; d <= n - 1 && n <= caps.max_n_linalg; ++d)
            timed([&] { return check_casimir(pres, d); });
    }
    if (wants("invariant-monomials")) {
        if (n <= caps.max_n_linalg)
            timed([&] { return check_invariant_monomials(pres, caps.invariant_maxdeg); });
    }
    if (wants("surjectivity")) {
        if (n <= caps.max_n_surjectivity) {
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    timed([&] { return check_surjectivity(pres, i, j, caps.surjectivity_bound); });
        } else {
            auto r = make_report("surjectivity", {{"n", std::to_string(n)}});
            skip(r, "n exceeds cap " + std::to_string(caps.max_n_surjectivity));
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

}  // namespace slnpres
