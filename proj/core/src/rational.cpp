#include "slnpres/rational.hpp"

#include <stdexcept>

namespace slnpres {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: malformed rational '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace slnpres
