#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fracdec {

// Exact rational; no floating point on any correctness path.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat x(num, den);
    x.canonicalize();
    return x;
}

// Serialized as "p/q" (or "p" when q == 1); never as a float.
inline std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
    Rat x;
    if (x.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: '" + s + "'");
    x.canonicalize();
    return x;
}

}  // namespace fracdec
