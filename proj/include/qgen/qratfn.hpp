#pragma once

#include <optional>

#include "qgen/qpoly.hpp"

namespace qgen {

// Rational function in q over the rationals. Canonical form: numerator and
// denominator coprime, denominator monic and nonzero; zero is 0/1.
// Embeds the Laurent ring exactly (q^-m becomes 1/q^m).
class QRatFn {
 public:
  QRatFn() : num_(), den_(1) {}
  QRatFn(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit QRatFn(const Rational& c) : num_(c), den_(1) {}
  QRatFn(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static QRatFn from(const QLaurent& p) {
    if (p.is_zero()) return QRatFn();
    int m = p.min_exp();
    QPoly num;
    if (m < 0) {
      std::vector<Rational> c(static_cast<size_t>(p.max_exp() - m) + 1,
                              Rational(0));
      for (const auto& [e, v] : p.terms()) c[static_cast<size_t>(e - m)] = v;
      return QRatFn(QPoly(std::move(c)), QPoly::q_power(-m));
    }
    std::vector<Rational> c(static_cast<size_t>(p.max_exp()) + 1, Rational(0));
    for (const auto& [e, v] : p.terms()) c[static_cast<size_t>(e)] = v;
    return QRatFn(QPoly(std::move(c)), QPoly(1));
  }

  bool is_zero() const { return num_.is_zero(); }
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  friend QRatFn operator+(const QRatFn& a, const QRatFn& b) {
    return QRatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend QRatFn operator-(const QRatFn& a, const QRatFn& b) {
    return QRatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend QRatFn operator*(const QRatFn& a, const QRatFn& b) {
    return QRatFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend QRatFn operator/(const QRatFn& a, const QRatFn& b) {
    if (b.is_zero()) throw Error("QRatFn: division by zero");
    return QRatFn(a.num_ * b.den_, a.den_ * b.num_);
  }
  QRatFn operator-() const {
    QRatFn r = *this;
    r.num_ = -r.num_;
    return r;
  }
  QRatFn& operator+=(const QRatFn& o) { return *this = *this + o; }
  QRatFn& operator-=(const QRatFn& o) { return *this = *this - o; }
  QRatFn& operator*=(const QRatFn& o) { return *this = *this * o; }
  QRatFn& operator/=(const QRatFn& o) { return *this = *this / o; }

  bool operator==(const QRatFn& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const QRatFn& o) const { return !(*this == o); }

 private:
  void normalize() {
    if (den_.is_zero()) throw Error("QRatFn: zero denominator");
    if (num_.is_zero()) {
      den_ = QPoly(1);
      return;
    }
    QPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      QPoly q, r;
      QPoly::divmod(num_, g, q, r);
      num_ = q;
      QPoly::divmod(den_, g, q, r);
      den_ = q;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
      den_.scale(1 / lead);
      num_.scale(1 / lead);
    }
  }

  QPoly num_, den_;
};

inline bool is_zero(const QRatFn& f) { return f.is_zero(); }
inline bool is_one(const QRatFn& f) { return f.num().is_one() && f.den().is_one(); }

inline Rational evaluate_at_q1(const QRatFn& f) {
  Rational d = f.den().eval_at_one();
  if (d == 0)
    throw DenominatorVanishes("denominator vanishes at q = 1");
  return f.num().eval_at_one() / d;
}

inline std::optional<QRatFn> try_invert(const QRatFn& f) {
  if (f.is_zero()) return std::nullopt;
  return QRatFn(1) / f;
}

// Exact downcast of a q-rational function whose denominator is a monomial.
inline std::optional<QLaurent> ratfn_to_qlaurent(const QRatFn& f) {
  if (f.is_zero()) return QLaurent();
  const QPoly& d = f.den();
  for (int i = 0; i < d.degree(); ++i)
    if (d.coeff(i) != 0) return std::nullopt;
  QLaurent r = f.num().to_qlaurent().shifted(-d.degree());
  return r.scale(1 / d.leading());
}

}  // namespace qgen
