#pragma once

#include <vector>

#include "qgen/qlaurent.hpp"

namespace qgen {

// Dense polynomial in q over the rationals (nonnegative exponents only).
// Internal representation for QRatFn; canonical form trims trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) c_.push_back(Rational(c));
  }
  explicit QPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
  }
  explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly q_power(int e, const Rational& coef = Rational(1)) {
    QPoly p;
    if (coef != 0) {
      p.c_.assign(static_cast<size_t>(e) + 1, Rational(0));
      p.c_.back() = coef;
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // zero -> -1
  Rational coeff(int e) const {
    return (e < 0 || e >= static_cast<int>(c_.size())) ? Rational(0) : c_[e];
  }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
  QPoly operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  QPoly& scale(const Rational& x) {
    if (x == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= x;
    return *this;
  }

  static void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
    if (b.is_zero()) throw Error("QPoly: division by zero");
    quo = QPoly();
    rem = a;
    if (a.degree() < b.degree()) return;
    quo.c_.assign(a.c_.size() - b.c_.size() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      int shift = rem.degree() - b.degree();
      Rational f = rem.leading() / b.leading();
      quo.c_[shift] = f;
      for (size_t i = 0; i < b.c_.size(); ++i)
        rem.c_[i + shift] -= f * b.c_[i];
      rem.trim();
    }
    quo.trim();
  }

  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  Rational eval_at_one() const {
    Rational r = 0;
    for (const auto& c : c_) r += c;
    return r;
  }

  QPoly monic() const {
    QPoly r = *this;
    if (!r.is_zero()) r.scale(1 / r.leading());
    return r;
  }

  QLaurent to_qlaurent() const {
    QLaurent r;
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) r += QLaurent::q_power(static_cast<int>(i), c_[i]);
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

namespace detail {

// Integer image of a rational polynomial (denominators cleared), primitive part.
inline std::vector<Integer> primitive_integer_poly(const QPoly& p) {
  Integer lcm = 1;
  for (const auto& c : p.coeffs()) {
    Integer d = denominator(c);
    lcm = lcm / gcd(lcm, d) * d;
  }
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer x = numerator(c) * (lcm / denominator(c));
    v.push_back(x);
    content = gcd(content, x);
  }
  if (content > 1)
    for (auto& x : v) x /= content;
  return v;
}

inline void trim_int(std::vector<Integer>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

inline void make_primitive(std::vector<Integer>& v) {
  Integer content = 0;
  for (const auto& x : v) content = gcd(content, x);
  if (content > 1)
    for (auto& x : v) x /= content;
}

// Pseudo-remainder of a by b (both nonzero, deg a >= deg b).
inline std::vector<Integer> pseudo_rem(std::vector<Integer> a,
                                       const std::vector<Integer>& b) {
  const Integer& lb = b.back();
  int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int shift = static_cast<int>(a.size()) - 1 - db;
    Integer la = a.back();
    for (auto& x : a) x *= lb;
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] -= la * b[i];
    trim_int(a);
  }
  return a;
}

}  // namespace detail

// Monic gcd over Q[q], computed with the primitive Euclidean algorithm over
// the integers to avoid rational coefficient swell.
inline QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<Integer> u = detail::primitive_integer_poly(a);
  std::vector<Integer> v = detail::primitive_integer_poly(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<Integer> r = detail::pseudo_rem(u, v);
    detail::make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(u.size());
  for (const auto& x : u) coeffs.emplace_back(x);
  return QPoly(std::move(coeffs)).monic();
}

}  // namespace qgen
