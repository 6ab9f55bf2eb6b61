#pragma once

#include <vector>

#include "qgen/qratfn.hpp"

namespace qgen {

// Polynomial in s over a coefficient ring C, with the s-exponent allowed to
// reach -1 (that slot houses the index -1 Fibonacci polynomials). Canonical
// form: leading and trailing zero coefficients trimmed; zero has offset 0.
template <class C>
class SLaurent {
 public:
  SLaurent() = default;
  SLaurent(long v) {  // NOLINT(google-explicit-constructor)
    if (v != 0) c_.push_back(C(v));
  }
  explicit SLaurent(C v) {
    if (!is_zero(v)) c_.push_back(std::move(v));
  }

  static SLaurent s_power(int e, C coef = C(1)) {
    SLaurent p;
    if (!qgen::is_zero(coef)) {
      p.min_ = e;
      p.c_.push_back(std::move(coef));
      p.check_offset();
    }
    return p;
  }

  bool is_zero_poly() const { return c_.empty(); }
  int min_exp() const { return c_.empty() ? 0 : min_; }
  int degree() const {  // zero -> -1 by convention
    return c_.empty() ? -1 : min_ + static_cast<int>(c_.size()) - 1;
  }

  C coeff(int e) const {
    int i = e - min_;
    if (c_.empty() || i < 0 || i >= static_cast<int>(c_.size())) return C(0);
    return c_[static_cast<size_t>(i)];
  }

  const C& leading() const { return c_.back(); }

  friend SLaurent operator+(const SLaurent& a, const SLaurent& b) {
    if (a.c_.empty()) return b;
    if (b.c_.empty()) return a;
    int lo = std::min(a.min_, b.min_);
    int hi = std::max(a.degree(), b.degree());
    SLaurent r;
    r.min_ = lo;
    r.c_.assign(static_cast<size_t>(hi - lo) + 1, C(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      r.c_[static_cast<size_t>(a.min_ - lo) + i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i)
      r.c_[static_cast<size_t>(b.min_ - lo) + i] += b.c_[i];
    r.normalize();
    return r;
  }
  friend SLaurent operator-(const SLaurent& a, const SLaurent& b) {
    return a + (-b);
  }
  SLaurent operator-() const {
    SLaurent r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend SLaurent operator*(const SLaurent& a, const SLaurent& b) {
    if (a.c_.empty() || b.c_.empty()) return SLaurent();
    SLaurent r;
    r.min_ = a.min_ + b.min_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, C(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (qgen::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
  }
  SLaurent& operator+=(const SLaurent& o) { return *this = *this + o; }
  SLaurent& operator-=(const SLaurent& o) { return *this = *this - o; }
  SLaurent& operator*=(const SLaurent& o) { return *this = *this * o; }

  SLaurent& scale(const C& x) {
    if (qgen::is_zero(x)) {
      c_.clear();
      min_ = 0;
      return *this;
    }
    for (auto& c : c_) c = c * x;
    normalize();
    return *this;
  }
  friend SLaurent operator*(SLaurent a, const C& x) { return a.scale(x); }
  friend SLaurent operator*(const C& x, SLaurent a) { return a.scale(x); }

  bool operator==(const SLaurent& o) const {
    return min_exp() == o.min_exp() && c_ == o.c_;
  }
  bool operator!=(const SLaurent& o) const { return !(*this == o); }

 private:
  void normalize() {
    while (!c_.empty() && qgen::is_zero(c_.back())) c_.pop_back();
    size_t drop = 0;
    while (drop < c_.size() && qgen::is_zero(c_[drop])) ++drop;
    if (drop) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(drop));
      min_ += static_cast<int>(drop);
    }
    if (c_.empty()) min_ = 0;
    check_offset();
  }
  void check_offset() const {
    if (!c_.empty() && min_ < -1)
      throw Error("SLaurent: s-exponent below -1");
  }

  int min_ = 0;
  std::vector<C> c_;
};

template <class C>
bool is_zero(const SLaurent<C>& p) {
  return p.is_zero_poly();
}

}  // namespace qgen
