#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace kvf {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator once canonicalized; every constructor here does so.
using Rat = mpq_class;

inline Rat frac(long num, long den = 1) {
    if (den == 0) throw std::domain_error("frac: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator");
    q.canonicalize();
    return q;
}

// "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& q) {
    return q.get_str();
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

} // namespace kvf
