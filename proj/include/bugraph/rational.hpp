#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "bugraph/errors.hpp"

namespace bugraph {

/// Unbounded signed integer.
using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over BigInt; always reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "num/den", denominator always printed ("3/1").
inline std::string to_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw Error("empty integer literal");
  std::size_t i = (text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw Error("integer literal without digits");
  for (; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw Error("invalid integer literal '" + text + "'");
  return BigInt(text);
}

/// Builds num/den from decimal strings; rejects a zero denominator.
inline Rational make_rational(const std::string& num, const std::string& den) {
  BigInt d = parse_bigint(den);
  if (d == 0) throw Error("zero denominator");
  return Rational(parse_bigint(num), d);
}

}  // namespace bugraph
