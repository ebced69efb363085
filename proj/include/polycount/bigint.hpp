#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace polycount {

// All counts and coefficients in this library are exact signed integers.
using BigInt = boost::multiprecision::cpp_int;

// Exact decimal rendering, no precision loss.
std::string to_decimal(const BigInt& value);

// Parses an optionally signed decimal string. Throws std::invalid_argument
// for anything that is not a plain base-10 integer.
BigInt parse_decimal(std::string_view text);

}  // namespace polycount
