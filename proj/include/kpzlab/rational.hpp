#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace kpzlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline double to_double(const Rat& q) {
  return boost::multiprecision::cpp_rational(q.numerator(), q.denominator())
      .convert_to<double>();
}

inline Int binomial_int(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

inline Rat rat_pow(const Rat& x, int e) {
  Rat r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace kpzlab
