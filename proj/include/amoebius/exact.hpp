#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace amoebius {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

inline ExactInt ipow(std::uint64_t base, unsigned exp) {
  ExactInt b = base;
  return boost::multiprecision::pow(b, exp);
}

inline std::string to_decimal(ExactInt const &v) { return v.str(); }

// "p/q" in lowest terms, or just "p" when the denominator is 1.
inline std::string to_decimal(ExactRational const &v) {
  auto num = boost::multiprecision::numerator(v);
  auto den = boost::multiprecision::denominator(v);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

inline ExactRational make_rational(ExactInt const &num, ExactInt const &den) {
  return ExactRational(num, den);
}

} // namespace amoebius
