#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdio>
#include <string>

namespace treewalk {

// Expression templates off: values behave like plain numbers in ?: and auto.
using ExactInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                               boost::multiprecision::et_off>;
using ExactRational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                                    boost::multiprecision::et_off>;

inline ExactRational ratio(const ExactInt& num, const ExactInt& den) {
  return ExactRational(num, den);
}

inline ExactInt numerator_of(const ExactRational& q) {
  return boost::multiprecision::numerator(q);
}

inline ExactInt denominator_of(const ExactRational& q) {
  return boost::multiprecision::denominator(q);
}

/// "p/q", or "p" when the value is an integer.
inline std::string to_string(const ExactRational& q) {
  ExactInt den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

inline std::string to_string(const ExactInt& v) { return v.str(); }

/// Advisory decimal rendering with 12 significant digits.
inline std::string to_decimal(const ExactRational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.convert_to<double>());
  return buf;
}

}  // namespace treewalk
