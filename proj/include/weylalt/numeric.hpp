#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace weylalt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;
using BigRational = boost::multiprecision::cpp_rational;

/// Renders "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& value);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& value) { return value.denominator() == 1; }

}  // namespace weylalt
