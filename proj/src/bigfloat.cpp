#include "fracdec/bigfloat.hpp"

#include <cstdio>
#include <vector>

namespace fracdec {

std::string BigFloat::str(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRe", digits);
    std::vector<char> buf(digits + 64);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

}  // namespace fracdec
