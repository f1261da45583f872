#include "slnpres/presentation.hpp"

#include "slnpres/lie.hpp"
#include "slnpres/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace slnpres {

namespace {
std::mutex cache_mutex;
std::map<int, VarTablePtr> pres_tables;
}  // namespace

VarTablePtr pres_vartable(int n) {
    if (n < 2) throw std::invalid_argument("pres_vartable: n must be >= 2");
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = pres_tables.find(n);
    if (it != pres_tables.end()) return it->second;
    std::vector<VarDesc> vars;
    for (Sign sign : {Sign::Plus, Sign::Minus})
        for (int d = 1; d <= n - 1; ++d)
            for (const IndexSeq& seq : all_index_seqs(n, d)) vars.push_back(PresVar{sign, seq});
    auto table = VarTable::make(std::move(vars));
    pres_tables.emplace(n, table);
    return table;
}

VarId pres_var_id(int n, Sign sign, const IndexSeq& seq) {
    return pres_vartable(n)->id_of_name(var_desc_name(PresVar{sign, seq}));
}

bool RelTag::operator==(const RelTag& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Plucker) return sign == o.sign && p == o.p && q == o.q && i == o.i && j == o.j;
    return d == o.d;
}

std::vector<TaggedRelation> plucker_relations(int n, Sign sign, int p, int q) {
    if (!(1 <= p && p <= q && q <= n - 1)) throw std::invalid_argument("plucker_relations: need 1 <= p <= q <= n-1");
    VarTablePtr table = pres_vartable(n);
    std::vector<TaggedRelation> out;
    for (const IndexSeq& i : all_index_seqs(n, p - 1)) {
        for (const IndexSeq& j : all_index_seqs(n, q + 1)) {
            Polynomial rel(table);
            for (int l = 1; l <= q + 1; ++l) {
                std::vector<int> first = i.entries;
                first.push_back(j.entries[l - 1]);
                auto norm = normalize_index(n, first);
                if (!norm) continue;
                std::vector<int> second = j.entries;
                second.erase(second.begin() + (l - 1));
                const Rat coef((l % 2 == 0 ? 1 : -1) * norm->sign);
                VarId a = pres_var_id(n, sign, norm->seq);
                VarId b = pres_var_id(n, sign, IndexSeq(n, second));
                rel = rel + Polynomial::term(table, coef, Monomial({{a, 1}, {b, 1}}));
            }
            if (rel.is_zero()) continue;
            RelTag tag;
            tag.kind = RelTag::Kind::Plucker;
            tag.sign = sign;
            tag.p = p;
            tag.q = q;
            tag.i = i.entries;
            tag.j = j.entries;
            out.push_back(TaggedRelation{std::move(tag), std::move(rel)});
        }
    }
    return out;
}

Polynomial sl2_relation_closed(int n, int d) {
    if (d < 1 || d > n - 1) throw std::invalid_argument("sl2_relation_closed: d out of range [1,n-1]");
    VarTablePtr table = pres_vartable(n);
    Polynomial s(table);
    for (const IndexSeq& i : all_index_seqs(n, n - d)) {
        auto [istar, sign] = complement(i);
        VarId minus_var = pres_var_id(n, Sign::Minus, i);
        VarId plus_var = pres_var_id(n, Sign::Plus, istar);
        s = s + Polynomial::term(table, Rat(sign), Monomial({{minus_var, 1}, {plus_var, 1}}));
    }
    return s;
}

namespace {

// Monomial basis x+_a x-_b of the bidegree-(w_d, w_{n-d}) component of
// F+ (x) F-, in enumeration order.
std::vector<Monomial> sl2_component_basis(int n, int d) {
    std::vector<Monomial> basis;
    for (const IndexSeq& a : all_index_seqs(n, d))
        for (const IndexSeq& b : all_index_seqs(n, n - d)) {
            VarId va = pres_var_id(n, Sign::Plus, a);
            VarId vb = pres_var_id(n, Sign::Minus, b);
            basis.push_back(Monomial({{va, 1}, {vb, 1}}));
        }
    return basis;
}

// Nullspace of the stacked Chevalley actions on that component.
std::vector<std::vector<Rat>> sl2_invariant_nullspace(int n, const std::vector<Monomial>& basis) {
    VarTablePtr table = pres_vartable(n);
    std::map<Monomial, size_t, bool (*)(const Monomial&, const Monomial&)> index(
        +[](const Monomial& a, const Monomial& b) { return MonomialOrder::degrevlex().less(a, b); });
    for (size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);

    RatMatrix system;
    for (const LieElt& x : LieElt::chevalley_generators(n)) {
        // the action preserves the component, so columns live in the same basis
        RatMatrix block(basis.size(), basis.size());
        for (size_t c = 0; c < basis.size(); ++c) {
            Polynomial img = act_pres(x, Polynomial::term(table, Rat(1), basis[c]));
            for (const auto& [m, coef] : img.terms()) {
                auto it = index.find(m);
                if (it == index.end()) throw std::logic_error("sl2 solver: action left the component");
                block.at(it->second, c) = coef;
            }
        }
        for (size_t r = 0; r < basis.size(); ++r) {
            std::vector<Rat> row(basis.size());
            for (size_t c = 0; c < basis.size(); ++c) row[c] = block.at(r, c);
            system.append_row(std::move(row));
        }
    }
    return system.nullspace();
}

}  // namespace

int sl2_invariant_space_dim(int n, int d) {
    if (d < 1 || d > n - 1) throw std::invalid_argument("sl2_invariant_space_dim: d out of range");
    auto basis = sl2_component_basis(n, d);
    return static_cast<int>(sl2_invariant_nullspace(n, basis).size());
}

Polynomial sl2_relation_solve(int n, int d) {
    if (d < 1 || d > n - 1) throw std::invalid_argument("sl2_relation_solve: d out of range [1,n-1]");
    VarTablePtr table = pres_vartable(n);
    auto basis = sl2_component_basis(n, d);
    auto null = sl2_invariant_nullspace(n, basis);
    if (null.size() != 1)
        throw std::runtime_error("sl2_relation_solve: invariant space has dimension " +
                                 std::to_string(null.size()) + ", expected 1");

    Polynomial t(table);
    for (size_t k = 0; k < basis.size(); ++k)
        t = t + Polynomial::term(table, null[0][k], basis[k]);

    // Normalize t(e,e) = 1. Evaluating phi(t) at the identity picks out the
    // coefficient of x+_{(n-d+1..n)} x-_{(1..n-d)}: those are the only minors
    // equal to 1 at e, all others vanish there.
    std::vector<int> top(d), bottom(n - d);
    for (int k = 0; k < d; ++k) top[k] = n - d + 1 + k;
    for (int k = 0; k < n - d; ++k) bottom[k] = 1 + k;
    Monomial anchor({{pres_var_id(n, Sign::Plus, IndexSeq(n, top)), 1},
                     {pres_var_id(n, Sign::Minus, IndexSeq(n, bottom)), 1}});
    Rat value = t.coefficient(anchor);
    if (value == 0) throw std::runtime_error("sl2_relation_solve: invariant vanishes at the identity");
    return t.scaled(Rat(1) / value);
}

std::unordered_map<VarId, Polynomial> Presentation::phi_map() const {
    std::unordered_map<VarId, Polynomial> map;
    for (VarId v = 0; v < phi.size(); ++v) map.emplace(v, phi[v]);
    return map;
}

Polynomial Presentation::apply_phi(const Polynomial& p) const {
    return p.substitute(phi_map());
}

Rat Presentation::identity_value(const Polynomial& p) const {
    return apply_phi(p).evaluate(identity_point(n));
}

bool Presentation::operator==(const Presentation& o) const {
    return n == o.n && relations == o.relations && phi == o.phi && det_relation == o.det_relation;
}

Presentation build_presentation(int n) {
    if (n < 2) throw std::invalid_argument("build_presentation: n must be >= 2");
    Presentation pres;
    pres.n = n;
    pres.vartable = pres_vartable(n);
    pres.matrix_table = matrix_vartable(n);

    for (Sign sign : {Sign::Plus, Sign::Minus})
        for (int p = 1; p <= n - 1; ++p)
            for (int q = p; q <= n - 1; ++q)
                for (auto& rel : plucker_relations(n, sign, p, q)) pres.relations.push_back(std::move(rel));

    for (int d = 1; d <= n - 1; ++d) {
        RelTag tag;
        tag.kind = RelTag::Kind::Sl2;
        tag.d = d;
        Polynomial rel = sl2_relation_closed(n, d) - Polynomial::constant(pres.vartable, 1);
        pres.relations.push_back(TaggedRelation{tag, std::move(rel)});
    }

    pres.phi.reserve(pres.vartable->size());
    for (VarId v = 0; v < pres.vartable->size(); ++v) {
        const auto& pv = std::get<PresVar>(pres.vartable->desc(v));
        pres.phi.push_back(minor(n, pv.sign, pv.seq));
    }
    pres.det_relation = determinant(n) - Polynomial::constant(pres.matrix_table, 1);
    return pres;
}

Presentation reduce_relations(const Presentation& pres) {
    Presentation out = pres;
    out.relations.clear();

    // Group the Plucker relations by (sign, p, q); each family lives in its
    // own bidegree, so per-family independence is global independence.
    std::map<std::tuple<int, int, int>, std::vector<const TaggedRelation*>> families;
    for (const auto& rel : pres.relations) {
        if (rel.tag.kind != RelTag::Kind::Plucker) continue;
        families[{static_cast<int>(rel.tag.sign), rel.tag.p, rel.tag.q}].push_back(&rel);
    }
    for (auto& [key, fam] : families) {
        // greedy prefix-independent selection by exact rank
        std::map<Monomial, size_t, bool (*)(const Monomial&, const Monomial&)> index(
            +[](const Monomial& a, const Monomial& b) { return MonomialOrder::degrevlex().less(a, b); });
        for (const auto* rel : fam)
            for (const auto& [m, c] : rel->poly.terms())
                index.emplace(m, 0);
        size_t next = 0;
        for (auto& [m, idx] : index) idx = next++;

        RatMatrix kept(0, 0);
        size_t rank = 0;
        for (const auto* rel : fam) {
            std::vector<Rat> row(index.size(), Rat(0));
            for (const auto& [m, c] : rel->poly.terms()) row[index.at(m)] = c;
            RatMatrix trial = kept;
            if (trial.cols() == 0) trial = RatMatrix(0, index.size());
            trial.append_row(row);
            if (trial.rank() > rank) {
                kept = std::move(trial);
                ++rank;
                out.relations.push_back(*rel);
            }
        }
    }
    for (const auto& rel : pres.relations)
        if (rel.tag.kind == RelTag::Kind::Sl2) out.relations.push_back(rel);
    return out;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

using nlohmann::json;

json poly_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.sorted_terms(MonomialOrder::degrevlex())) {
        json mono = json::array();
        for (const auto& [v, e] : m.entries()) mono.push_back({v, e});
        terms.push_back({c.get_num().get_str(), c.get_den().get_str(), mono});
    }
    return terms;
}

Polynomial poly_from_json(const VarTablePtr& table, const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument("parse: " + where + ": polynomial must be an array");
    Polynomial::TermMap terms;
    for (size_t t = 0; t < j.size(); ++t) {
        const json& term = j[t];
        if (!term.is_array() || term.size() != 3)
            throw std::invalid_argument("parse: " + where + ", term " + std::to_string(t) +
                                        ": expected [num, den, monomial]");
        Rat c = make_rat(Int(term[0].get<std::string>()), Int(term[1].get<std::string>()));
        if (c == 0) throw std::invalid_argument("parse: " + where + ": zero coefficient stored");
        std::vector<Monomial::Entry> entries;
        for (const json& pair : term[2]) {
            VarId v = pair.at(0).get<VarId>();
            unsigned e = pair.at(1).get<unsigned>();
            if (v >= table->size())
                throw std::invalid_argument("parse: " + where + ", term " + std::to_string(t) +
                                            ": undeclared variable id " + std::to_string(v));
            if (e == 0) throw std::invalid_argument("parse: " + where + ": zero exponent stored");
            entries.emplace_back(v, e);
        }
        if (!terms.emplace(Monomial(std::move(entries)), std::move(c)).second)
            throw std::invalid_argument("parse: " + where + ": duplicate monomial");
    }
    return Polynomial(table, std::move(terms));
}

json tag_to_json(const RelTag& tag) {
    json t;
    if (tag.kind == RelTag::Kind::Plucker) {
        t["kind"] = "plucker";
        t["sign"] = std::string(1, sign_char(tag.sign));
        t["p"] = tag.p;
        t["q"] = tag.q;
        t["i"] = tag.i;
        t["j"] = tag.j;
    } else {
        t["kind"] = "sl2";
        t["d"] = tag.d;
    }
    return t;
}

RelTag tag_from_json(const json& t, const std::string& where) {
    RelTag tag;
    const std::string kind = t.at("kind").get<std::string>();
    if (kind == "plucker") {
        tag.kind = RelTag::Kind::Plucker;
        const std::string sign = t.at("sign").get<std::string>();
        if (sign != "+" && sign != "-") throw std::invalid_argument("parse: " + where + ": bad sign");
        tag.sign = sign == "+" ? Sign::Plus : Sign::Minus;
        tag.p = t.at("p").get<int>();
        tag.q = t.at("q").get<int>();
        tag.i = t.at("i").get<std::vector<int>>();
        tag.j = t.at("j").get<std::vector<int>>();
    } else if (kind == "sl2") {
        tag.kind = RelTag::Kind::Sl2;
        tag.d = t.at("d").get<int>();
    } else {
        throw std::invalid_argument("parse: " + where + ": unknown tag kind '" + kind + "'");
    }
    return tag;
}

}  // namespace

std::string emit(const Presentation& pres, EmitFormat format) {
    if (format == EmitFormat::Text) {
        const MonomialOrder order = MonomialOrder::degrevlex();
        std::string out = "presentation of k[SL_" + std::to_string(pres.n) + "]\n";
        out += "variables (" + std::to_string(pres.vartable->size()) + "):";
        for (VarId v = 0; v < pres.vartable->size(); ++v) out += " " + pres.vartable->name(v);
        out += "\nrelations (" + std::to_string(pres.relations.size()) + "):\n";
        for (const auto& rel : pres.relations) {
            if (rel.tag.kind == RelTag::Kind::Plucker) {
                out += "  [plucker " + std::string(1, sign_char(rel.tag.sign)) + " p=" + std::to_string(rel.tag.p) +
                       " q=" + std::to_string(rel.tag.q) + "] ";
            } else {
                out += "  [sl2 d=" + std::to_string(rel.tag.d) + "] ";
            }
            out += rel.poly.canonical_text(order) + " = 0\n";
        }
        out += "phi:\n";
        for (VarId v = 0; v < pres.vartable->size(); ++v)
            out += "  " + pres.vartable->name(v) + " -> " + pres.phi[v].canonical_text(order) + "\n";
        out += "modulo: " + pres.det_relation.canonical_text(order) + " = 0\n";
        return out;
    }

    json root;
    root["n"] = pres.n;
    json vars = json::array();
    for (VarId v = 0; v < pres.vartable->size(); ++v) {
        const auto& pv = std::get<PresVar>(pres.vartable->desc(v));
        vars.push_back({{"sign", std::string(1, sign_char(pv.sign))}, {"indices", pv.seq.entries}});
    }
    root["variables"] = std::move(vars);
    root["matrix_variables"] = pres.n;  // n x n grid, row-major ids
    json rels = json::array();
    for (const auto& rel : pres.relations)
        rels.push_back({{"tag", tag_to_json(rel.tag)}, {"poly", poly_to_json(rel.poly)}});
    root["relations"] = std::move(rels);
    json phi;
    for (VarId v = 0; v < pres.phi.size(); ++v) phi[std::to_string(v)] = poly_to_json(pres.phi[v]);
    root["phi"] = std::move(phi);
    root["det_relation"] = poly_to_json(pres.det_relation);
    return root.dump(2) + "\n";
}

Presentation parse_presentation(const std::string& bytes) {
    json root;
    try {
        root = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("parse: ") + e.what());
    }
    if (!root.is_object()) throw std::invalid_argument("parse: top level must be an object");

    const int n = root.at("n").get<int>();
    if (n < 2) throw std::invalid_argument("parse: n must be >= 2");
    if (root.at("matrix_variables").get<int>() != n)
        throw std::invalid_argument("parse: matrix_variables must equal n");

    Presentation pres;
    pres.n = n;
    pres.vartable = pres_vartable(n);
    pres.matrix_table = matrix_vartable(n);

    const json& vars = root.at("variables");
    if (vars.size() != pres.vartable->size())
        throw std::invalid_argument("parse: expected " + std::to_string(pres.vartable->size()) + " variables, got " +
                                    std::to_string(vars.size()));
    for (VarId v = 0; v < pres.vartable->size(); ++v) {
        const auto& pv = std::get<PresVar>(pres.vartable->desc(v));
        const std::string sign = vars[v].at("sign").get<std::string>();
        const auto indices = vars[v].at("indices").get<std::vector<int>>();
        if (sign != std::string(1, sign_char(pv.sign)) || indices != pv.seq.entries)
            throw std::invalid_argument("parse: variable " + std::to_string(v) +
                                        " does not match the canonical enumeration");
    }

    const json& rels = root.at("relations");
    for (size_t r = 0; r < rels.size(); ++r) {
        const std::string where = "relations[" + std::to_string(r) + "]";
        TaggedRelation rel{tag_from_json(rels[r].at("tag"), where),
                           poly_from_json(pres.vartable, rels[r].at("poly"), where)};
        pres.relations.push_back(std::move(rel));
    }

    const json& phi = root.at("phi");
    pres.phi.assign(pres.vartable->size(), Polynomial(pres.matrix_table));
    if (phi.size() != pres.vartable->size())
        throw std::invalid_argument("parse: phi must map every presentation variable");
    for (auto it = phi.begin(); it != phi.end(); ++it) {
        size_t v = 0;
        try {
            v = std::stoul(it.key());
        } catch (const std::exception&) {
            throw std::invalid_argument("parse: phi key '" + it.key() + "' is not a variable id");
        }
        if (v >= pres.vartable->size())
            throw std::invalid_argument("parse: phi key " + it.key() + " out of range");
        pres.phi[v] = poly_from_json(pres.matrix_table, it.value(), "phi[" + it.key() + "]");
    }
    pres.det_relation = poly_from_json(pres.matrix_table, root.at("det_relation"), "det_relation");
    return pres;
}

}  // namespace slnpres
