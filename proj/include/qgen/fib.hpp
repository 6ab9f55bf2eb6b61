#pragma once

#include <deque>
#include <type_traits>

#include "qgen/gaussian.hpp"
#include "qgen/slaurent.hpp"

namespace qgen {

enum class FibKind { classical, q, q_inverse };

// Fibonacci polynomial family with a memoized index cache. The recursion is
//   F_n = F_{n-1} + mult(n) * s * F_{n-2},   F_0 = 0, F_1 = 1,
// with mult(n) = 1 classically, q^{n-3} for the q-family and q^{3-n} for the
// q -> 1/q family. Index -1 is the single admitted negative index:
// F_-1 = s^-1, respectively q^2 s^-1 and q^-2 s^-1, forced by the recursion
// extended to n = 1. The cache grows monotonically under a single writer;
// concurrent reads are safe once warm.
template <class C>
class FibFamily {
 public:
  explicit FibFamily(FibKind kind) : kind_(kind) {
    static_assert(std::is_same_v<C, Rational> || std::is_same_v<C, QLaurent>);
    if constexpr (std::is_same_v<C, Rational>) {
      if (kind != FibKind::classical)
        throw Error("FibFamily: rational coefficients imply the classical kind");
    } else {
      if (kind == FibKind::classical)
        throw Error("FibFamily: the classical kind has rational coefficients");
    }
    cache_.push_back(minus_one());      // index -1
    cache_.push_back(SLaurent<C>());    // F_0 = 0
    cache_.push_back(SLaurent<C>(1));   // F_1 = 1
  }

  FibKind kind() const { return kind_; }

  const SLaurent<C>& poly(int n) const {
    if (n < -1) throw IndexOutOfRange("Fibonacci index below -1");
    while (static_cast<int>(cache_.size()) - 2 < n) {
      int m = static_cast<int>(cache_.size()) - 1;  // next index to build
      const SLaurent<C>& f1 = cache_[static_cast<size_t>(m)];      // F_{m-1}
      const SLaurent<C>& f2 = cache_[static_cast<size_t>(m) - 1];  // F_{m-2}
      cache_.push_back(f1 + SLaurent<C>::s_power(1, multiplier(m)) * f2);
    }
    return cache_[static_cast<size_t>(n) + 1];
  }

 private:
  C multiplier(int n) const {
    if constexpr (std::is_same_v<C, Rational>) {
      return Rational(1);
    } else {
      return kind_ == FibKind::q ? QLaurent::q_power(n - 3)
                                 : QLaurent::q_power(3 - n);
    }
  }

  SLaurent<C> minus_one() const {
    if constexpr (std::is_same_v<C, Rational>) {
      return SLaurent<C>::s_power(-1);
    } else {
      return SLaurent<C>::s_power(
          -1, QLaurent::q_power(kind_ == FibKind::q ? 2 : -2));
    }
  }

  FibKind kind_;
  mutable std::deque<SLaurent<C>> cache_;
};

inline SLaurent<Rational> fib_poly(int n) {
  FibFamily<Rational> fam(FibKind::classical);
  return fam.poly(n);
}

inline SLaurent<QLaurent> q_fib_poly(int n) {
  FibFamily<QLaurent> fam(FibKind::q);
  return fam.poly(n);
}

inline SLaurent<QLaurent> q_fib_poly_inv(int n) {
  FibFamily<QLaurent> fam(FibKind::q_inverse);
  return fam.poly(n);
}

// q -> 1/q applied coefficientwise to a polynomial in s.
inline SLaurent<QLaurent> substitute_q_inverse(const SLaurent<QLaurent>& p) {
  SLaurent<QLaurent> out;
  if (p.is_zero_poly()) return out;
  for (int e = p.min_exp(); e <= p.degree(); ++e) {
    QLaurent c = p.coeff(e);
    if (!c.is_zero())
      out += SLaurent<QLaurent>::s_power(e, substitute_q_inverse(c));
  }
  return out;
}

// q := 1 specialization of a q-coefficient polynomial in s.
inline SLaurent<Rational> specialize_q1(const SLaurent<QLaurent>& p) {
  SLaurent<Rational> out;
  if (p.is_zero_poly()) return out;
  for (int e = p.min_exp(); e <= p.degree(); ++e) {
    Rational c = evaluate_at_q1(p.coeff(e));
    if (c != 0) out += SLaurent<Rational>::s_power(e, c);
  }
  return out;
}

}  // namespace qgen
