#include "slnpres/vartable.hpp"

#include <atomic>
#include <stdexcept>

namespace slnpres {

namespace {
std::atomic<std::uint64_t> next_table_id{1};

std::string join_indices(const std::vector<int>& ix, bool wide) {
    std::string out;
    for (size_t k = 0; k < ix.size(); ++k) {
        if (wide && k > 0) out += ',';
        out += std::to_string(ix[k]);
    }
    return out;
}
}  // namespace

std::string var_desc_name(const VarDesc& d) {
    if (const auto* p = std::get_if<PresVar>(&d)) {
        // "x+_12" for n < 10; comma-separated indices otherwise
        return std::string("x") + sign_char(p->sign) + "_" + join_indices(p->seq.entries, p->seq.n > 9);
    }
    if (const auto* m = std::get_if<MatrixVar>(&d)) {
        return "x_{" + std::to_string(m->row) + "," + std::to_string(m->col) + "}";
    }
    return std::get<NamedVar>(d).name;
}

VarTable::VarTable(std::vector<VarDesc> vars) : vars_(std::move(vars)), table_id_(next_table_id++) {
    names_.reserve(vars_.size());
    for (VarId id = 0; id < vars_.size(); ++id) {
        std::string nm = var_desc_name(vars_[id]);
        if (!by_name_.emplace(nm, id).second)
            throw std::invalid_argument("VarTable: duplicate variable '" + nm + "'");
        names_.push_back(std::move(nm));
    }
}

std::shared_ptr<const VarTable> VarTable::make(std::vector<VarDesc> vars) {
    return std::shared_ptr<const VarTable>(new VarTable(std::move(vars)));
}

std::shared_ptr<const VarTable> VarTable::make_named(const std::vector<std::string>& names) {
    std::vector<VarDesc> vars;
    vars.reserve(names.size());
    for (const auto& nm : names) vars.push_back(NamedVar{nm});
    return make(std::move(vars));
}

VarId VarTable::id_of_name(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw std::invalid_argument("VarTable: unknown variable '" + name + "'");
    return it->second;
}

}  // namespace slnpres
