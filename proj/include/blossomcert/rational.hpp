#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace blossomcert {

/// Exact rational number. Every weight and dual value in the library is one of
/// these; nothing in the core touches floating point.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class RationalParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses an integer ("3"), an exact decimal ("-2.5") or a fraction ("7/2").
/// Exponent notation is rejected.
Rational parse_rational(std::string_view text);

/// "n" when integral, "p/q" in lowest terms otherwise.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace blossomcert
