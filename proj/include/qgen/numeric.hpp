#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "qgen/errors.hpp"

namespace qgen {

// Exact scalars. Rational is kept in canonical form by the backend:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw Error("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_one(const Rational& x) { return x == 1; }

inline Integer factorial(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// Binomial coefficient for arbitrary integer n and k >= 0; zero for k < 0.
// Negative n follows binom(-r, k) = (-1)^k binom(r+k-1, k).
inline Integer binomial(long n, long k) {
  if (k < 0) return 0;
  if (n < 0) {
    Integer v = binomial(-n + k - 1, k);
    return (k % 2 == 0) ? v : -v;
  }
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

inline Integer pow_integer(const Integer& base, unsigned long e) {
  Integer r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace qgen
