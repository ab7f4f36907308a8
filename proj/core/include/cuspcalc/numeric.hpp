#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cuspcalc {

// Exact arithmetic everywhere; discriminants of long chains overflow
// fixed-width words.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Ceiling of a positive rational.
inline Int ceil_pos(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  return (n + d - 1) / d;
}

}  // namespace cuspcalc
