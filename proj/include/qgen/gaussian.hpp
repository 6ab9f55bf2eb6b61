#pragma once

#include <vector>

#include "qgen/qlaurent.hpp"

namespace qgen {

namespace detail {

// Gaussian binomial for 0 <= k <= n as a dense integer coefficient vector,
// built by alternating exact multiplications by (1 - q^{n-k+t}) and exact
// divisions by (1 - q^t); every intermediate value is itself a Gaussian
// binomial, so the divisions never leave a remainder.
inline std::vector<Integer> gaussian_coeffs(long n, long k) {
  std::vector<Integer> p{1};
  for (long t = 1; t <= k; ++t) {
    long a = n - k + t;
    std::vector<Integer> m(p.size() + static_cast<size_t>(a), 0);
    for (size_t i = 0; i < p.size(); ++i) {
      m[i] += p[i];
      m[i + static_cast<size_t>(a)] -= p[i];
    }
    // Divide by (1 - q^t): quotient degree drops by t.
    std::vector<Integer> quo(m.size() - static_cast<size_t>(t), 0);
    for (size_t i = 0; i < quo.size(); ++i) {
      Integer prev = (i >= static_cast<size_t>(t)) ? quo[i - t] : Integer(0);
      quo[i] = m[i] + prev;
    }
    p = std::move(quo);
  }
  return p;
}

}  // namespace detail

// Gaussian q-binomial, total over all integer arguments. Zero when k < 0 or
// when 0 <= n < k; negative upper argument maps through
// [-r, k] = (-1)^k q^{-kr - k(k-1)/2} [r+k-1, k].
inline QLaurent gaussian_binomial(long n, long k) {
  if (k < 0) return QLaurent();
  if (n >= 0 && k > n) return QLaurent();
  if (n < 0) {
    long r = -n;
    QLaurent base = gaussian_binomial(r + k - 1, k);
    int shift = static_cast<int>(-(k * r + k * (k - 1) / 2));
    QLaurent shifted = base.shifted(shift);
    return (k % 2 == 0) ? shifted : -shifted;
  }
  std::vector<Integer> c = detail::gaussian_coeffs(n, k);
  QLaurent out;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out += QLaurent::q_power(static_cast<int>(i), Rational(c[i]));
  return out;
}

// [n]_q = 1 + q + ... + q^{n-1}.
inline QLaurent q_integer(long n) { return gaussian_binomial(n, 1); }

}  // namespace qgen
