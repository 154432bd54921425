#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace altpaths {

// Path and walk counts overflow 64 bits quickly (m, n in the thousands with
// lengths around ten), so every counter returns a 128-bit value.
__extension__ typedef unsigned __int128 Count;

using Rational = boost::rational<std::int64_t>;

std::string to_string(Count value);

// Only for printing in test diagnostics; Count is not a class type, so this
// is found by ordinary lookup inside namespace altpaths.
std::ostream& operator<<(std::ostream& os, Count value);

inline Count checked_add(Count a, Count b) {
    Count out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("128-bit count overflow in addition");
    }
    return out;
}

inline Count checked_mul(Count a, Count b) {
    Count out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("128-bit count overflow in multiplication");
    }
    return out;
}

// True when value <= bound, compared exactly.
inline bool at_most(Count value, const Rational& bound) {
    if (bound.numerator() < 0) {
        return false;
    }
    return checked_mul(value, static_cast<Count>(bound.denominator())) <=
           static_cast<Count>(bound.numerator());
}

}  // namespace altpaths
