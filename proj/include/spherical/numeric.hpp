#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace spherical {

/// Exact dimension / monomial counts.
using BigInt = boost::multiprecision::cpp_int;

/// Multiplicities and enumeration counts. Arithmetic on these goes through
/// checked_add / checked_mul so an overflow throws instead of wrapping.
using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
    if (a > std::numeric_limits<Count>::max() - b) throw std::overflow_error("multiplicity overflow");
    return a + b;
}

inline Count checked_mul(Count a, Count b) {
    if (a != 0 && b > std::numeric_limits<Count>::max() / a) throw std::overflow_error("multiplicity overflow");
    return a * b;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace spherical
