#pragma once

#include "slnpres/indexseq.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace slnpres {

using VarId = std::uint32_t;

enum class Sign : int { Plus = +1, Minus = -1 };

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Variable x±_{i1..id} of the polynomial algebra F.
struct PresVar {
    Sign sign;
    IndexSeq seq;

    bool operator==(const PresVar& o) const { return sign == o.sign && seq == o.seq; }
};

/// Coordinate function x_{i,j} on the matrix space of the target group.
struct MatrixVar {
    int n;
    int row;  // in [n]
    int col;  // in [n]

    bool operator==(const MatrixVar& o) const { return n == o.n && row == o.row && col == o.col; }
};

/// Plain named variable for ad-hoc rings (tests, univariate examples).
struct NamedVar {
    std::string name;
    bool operator==(const NamedVar& o) const { return name == o.name; }
};

using VarDesc = std::variant<PresVar, MatrixVar, NamedVar>;

std::string var_desc_name(const VarDesc& d);

/// Immutable ordered list of variable descriptors with dense ids 0..N-1.
/// Variable ids ascend in significance: the variable with the highest id is
/// the greatest in every monomial order over the table. Polynomials are tied
/// to the table instance they were built over; mixing tables is an error.
class VarTable {
public:
    static std::shared_ptr<const VarTable> make(std::vector<VarDesc> vars);
    /// Convenience: a table of NamedVars (ascending significance).
    static std::shared_ptr<const VarTable> make_named(const std::vector<std::string>& names);

    std::size_t size() const { return vars_.size(); }
    const VarDesc& desc(VarId id) const { return vars_.at(id); }
    const std::string& name(VarId id) const { return names_.at(id); }
    /// Injective descriptor -> id lookup; throws if absent.
    VarId id_of_name(const std::string& name) const;
    bool has_name(const std::string& name) const { return by_name_.count(name) != 0; }

    /// Unique per-instance id; used to reject cross-table operations.
    std::uint64_t table_id() const { return table_id_; }

private:
    explicit VarTable(std::vector<VarDesc> vars);

    std::vector<VarDesc> vars_;
    std::vector<std::string> names_;
    std::map<std::string, VarId> by_name_;
    std::uint64_t table_id_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

}  // namespace slnpres
