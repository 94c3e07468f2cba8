#pragma once

#include <sstream>
#include <string>

#include "digitsum/numeric.hpp"

namespace digitsum {

// Rational as "p/q" (just "p" for integers).
inline std::string fmt_rat(const Rat& x) {
    std::ostringstream os;
    os << numerator(x);
    if (denominator(x) != 1) os << '/' << denominator(x);
    return os.str();
}

// Real with 12 significant digits (the CSV contract).
inline std::string fmt_real(const Real& x, int digits = 12) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

inline std::string fmt_rat_decimal(const Rat& x, int digits = 12) {
    return fmt_real(to_real(x), digits);
}

}  // namespace digitsum
