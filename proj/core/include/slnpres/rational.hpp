#pragma once

#include <gmpxx.h>

#include <string>

namespace slnpres {

// Exact arithmetic substrate: arbitrary-precision integers and rationals.
// mpq_class keeps values canonical (lowest terms, positive denominator)
// under arithmetic; constructors from raw num/den must canonicalize.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Decimal rendering, "num/den" with the denominator omitted when it is 1.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses the rendering produced by rat_to_string. Throws on malformed input.
Rat rat_from_string(const std::string& s);

}  // namespace slnpres
