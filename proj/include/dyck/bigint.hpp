#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dyck {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const big_int& v) { return v.str(); }

inline big_int parse_decimal(const std::string& s) { return big_int(s); }

inline big_int factorial(unsigned n) {
  big_int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline big_int ipow(const big_int& base, unsigned e) {
  big_int r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

inline std::string to_string(const big_rational& q) {
  const big_int num = boost::multiprecision::numerator(q);
  const big_int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace dyck
