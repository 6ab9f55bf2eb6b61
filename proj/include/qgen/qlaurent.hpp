#pragma once

#include <map>
#include <optional>
#include <utility>

#include "qgen/numeric.hpp"

namespace qgen {

// Laurent polynomial in q with rational coefficients, stored as a sparse
// exponent -> coefficient map. Canonical form: no stored coefficient is zero.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(long c) {  // NOLINT(google-explicit-constructor) constants embed
    if (c != 0) terms_[0] = c;
  }
  explicit QLaurent(const Rational& c) {
    if (c != 0) terms_[0] = c;
  }

  static QLaurent q_power(int e, const Rational& coef = Rational(1)) {
    QLaurent p;
    if (coef != 0) p.terms_[e] = coef;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  bool is_monomial() const { return terms_.size() == 1; }

  // Exponent bounds; only meaningful for nonzero values.
  int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  Rational coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const std::map<int, Rational>& terms() const { return terms_; }

  QLaurent& operator+=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  QLaurent& operator-=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }

  QLaurent operator-() const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

  QLaurent& scale(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  friend QLaurent operator*(QLaurent a, const Rational& c) { return a.scale(c); }
  friend QLaurent operator*(const Rational& c, QLaurent a) { return a.scale(c); }

  // Multiplication by q^d.
  QLaurent shifted(int d) const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[e + d] = c;
    return r;
  }

  bool operator==(const QLaurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const QLaurent& o) const { return !(*this == o); }

 private:
  void add_term(int e, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else if (c == 0) {
      terms_.erase(it);
    }
  }

  std::map<int, Rational> terms_;
};

inline bool is_zero(const QLaurent& p) { return p.is_zero(); }
inline bool is_one(const QLaurent& p) { return p.is_constant() && p.coeff(0) == 1; }

// q -> 1/q: negate every exponent. An involution and a ring homomorphism.
inline QLaurent substitute_q_inverse(const QLaurent& p) {
  QLaurent r;
  for (const auto& [e, c] : p.terms()) r += QLaurent::q_power(-e, c);
  return r;
}

inline Rational evaluate_at_q1(const QLaurent& p) {
  Rational r = 0;
  for (const auto& [e, c] : p.terms()) r += c;
  return r;
}

// Units of the Laurent ring are exactly the nonzero monomials.
inline std::optional<QLaurent> try_invert(const QLaurent& p) {
  if (!p.is_monomial()) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  return QLaurent::q_power(-e, 1 / c);
}

inline std::optional<Rational> try_invert(const Rational& x) {
  if (x == 0) return std::nullopt;
  return 1 / x;
}

}  // namespace qgen
