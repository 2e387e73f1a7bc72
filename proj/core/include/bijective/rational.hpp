#pragma once

// Exact arithmetic used throughout the library. Hot loops work on integer
// ticks (multiples of a metric's unit length); everything that leaves a
// module as a length, cost or ratio is a Rational.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bijective {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Integer multiple of a metric's unit length.
using Ticks = std::int64_t;

/// Wide accumulator for products of counts.
__extension__ typedef unsigned __int128 UInt128;

/// Parses "3", "-3/4" or "0.25" into an exact rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& value);

/// Nearest double, for human-facing summaries only.
double to_double(const Rational& value);

inline Rational ticks_to_length(Ticks ticks, const Rational& unit) {
  return Rational(ticks) * unit;
}

/// A nonnegative ratio that may be +infinity (a positive cost matched
/// against a zero cost).
struct Ratio {
  Rational value{0};
  bool infinite = false;

  static Ratio inf() { return Ratio{Rational(0), true}; }
  static Ratio of(Rational v) { return Ratio{std::move(v), false}; }

  friend bool operator<(const Ratio& a, const Ratio& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator==(const Ratio& a, const Ratio& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
  friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }
};

bool operator<=(const Ratio& a, const Rational& b);
std::string to_string(const Ratio& r);

}  // namespace bijective
