#pragma once

#include <vector>

#include "qgen/slaurent.hpp"

namespace qgen {

// Formal power series in z truncated at a fixed order, coefficients in C.
// Binary operations carry the minimum of the operand orders. Coefficients are
// stored plain, never divided by factorials.
template <class C>
class TruncSeries {
 public:
  explicit TruncSeries(int order) : c_(static_cast<size_t>(order) + 1, C(0)) {
    if (order < 0) throw Error("TruncSeries: negative order");
  }

  static TruncSeries one(int order) { return monomial(order, 0, C(1)); }
  static TruncSeries monomial(int order, int k, C coef) {
    TruncSeries s(order);
    if (k <= order) s.c_[static_cast<size_t>(k)] = std::move(coef);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const C& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  C& coeff(int k) { return c_[static_cast<size_t>(k)]; }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
      if (qgen::is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= r.order(); ++j)
        r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  // Division; requires the divisor's constant term to be a unit of C.
  friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) {
    auto inv = try_invert(b.c_[0]);
    if (!inv)
      throw NonInvertibleConstantTerm(
          "series division: constant term is not a unit");
    TruncSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) {
      C acc = a.c_[k];
      for (int j = 1; j <= k; ++j) acc = acc - b.c_[j] * r.c_[k - j];
      r.c_[k] = acc * *inv;
    }
    return r;
  }

  TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
  TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }
  TruncSeries& operator/=(const TruncSeries& o) { return *this = *this / o; }

  TruncSeries& scale(const C& x) {
    for (auto& c : c_) c = c * x;
    return *this;
  }

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

 private:
  std::vector<C> c_;
};

// e^z truncated: coefficient of z^n is 1/n!.
inline TruncSeries<Rational> exp_series(int order) {
  TruncSeries<Rational> s(order);
  Rational c = 1;
  s.coeff(0) = 1;
  for (int n = 1; n <= order; ++n) {
    c /= n;
    s.coeff(n) = c;
  }
  return s;
}

}  // namespace qgen
