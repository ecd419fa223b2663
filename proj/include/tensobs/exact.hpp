#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tensobs {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int factorial(uint64_t n);
Int ipow(Int base, uint32_t exp);

// base^exp as an exact rational; exp may be negative.
Rational rpow(const Int& base, int64_t exp);

/// Scientific form with `digits` significant digits and half-up rounding,
/// e.g. 191374041 -> "1.91e+08". Exponent has at least two digits.
std::string to_scientific(const Int& v, unsigned digits = 3);

/// Exact decimal string; values >= 1e8 get the scientific form appended
/// in parentheses, mirroring how large counts are usually quoted.
std::string format_count(const Int& v);

} // namespace tensobs
