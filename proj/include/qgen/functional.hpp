#pragma once

#include <string>
#include <vector>

#include "qgen/fib.hpp"

namespace qgen {

// Exact embeddings between the implemented value rings.
template <class V>
V value_cast(const Rational& x) {
  if constexpr (std::is_same_v<V, Rational>)
    return x;
  else if constexpr (std::is_same_v<V, QLaurent>)
    return QLaurent(x);
  else
    return QRatFn(x);
}

template <class V>
V value_cast(const QLaurent& x) {
  if constexpr (std::is_same_v<V, QLaurent>)
    return x;
  else {
    static_assert(std::is_same_v<V, QRatFn>);
    return QRatFn::from(x);
  }
}

// A basis of polynomials b_0..b_N with deg_s(b_k) = k, together with the
// values a functional assigns to them.
template <class C, class V>
struct GradedBasis {
  std::vector<SLaurent<C>> polys;
  std::vector<V> values;
};

// Linear functional on polynomials in s, stored as its table of monomial
// values m_k = Phi(s^k), k = 0..N. Immutable after construction.
template <class V>
class LinearFunctional {
 public:
  LinearFunctional(std::string name, std::vector<V> monomial_values)
      : name_(std::move(name)), m_(std::move(monomial_values)) {}

  const std::string& name() const { return name_; }
  int table_size() const { return static_cast<int>(m_.size()) - 1; }  // N

  const V& monomial_value(int k) const {
    if (k < 0 || k > table_size())
      throw DegreeExceedsTable("monomial degree " + std::to_string(k) +
                               " exceeds table size " +
                               std::to_string(table_size()));
    return m_[static_cast<size_t>(k)];
  }

  template <class C>
  V operator()(const SLaurent<C>& p) const {
    if (p.is_zero_poly()) return V(0);
    if (p.min_exp() < 0)
      throw NegativeOffset("functional applied to an s^-1 term");
    if (p.degree() > table_size())
      throw DegreeExceedsTable("degree " + std::to_string(p.degree()) +
                               " exceeds table size " +
                               std::to_string(table_size()));
    V acc(0);
    for (int e = p.min_exp(); e <= p.degree(); ++e) {
      C c = p.coeff(e);
      if (!qgen::is_zero(c))
        acc = acc + value_cast<V>(c) * m_[static_cast<size_t>(e)];
    }
    return acc;
  }

 private:
  std::string name_;
  std::vector<V> m_;
};

// Compile a graded basis down to monomial values by back-substitution along
// the triangular degree structure. The leading coefficient of each basis
// polynomial must be invertible in the value ring; if it is not, the caller
// has to widen the value ring (this is why the q-analogue of M lives over
// rational functions).
template <class C, class V>
LinearFunctional<V> functional_from_graded_basis(std::string name,
                                                 const GradedBasis<C, V>& b) {
  if (b.polys.size() != b.values.size())
    throw Error("graded basis: polynomial/value count mismatch");
  std::vector<V> m;
  m.reserve(b.polys.size());
  for (size_t k = 0; k < b.polys.size(); ++k) {
    const SLaurent<C>& p = b.polys[k];
    if (p.min_exp() < 0)
      throw NegativeOffset("graded basis polynomial with an s^-1 term");
    if (p.degree() != static_cast<int>(k))
      throw Error("graded basis: deg b_" + std::to_string(k) + " is " +
                  std::to_string(p.degree()));
    V lead = value_cast<V>(p.coeff(static_cast<int>(k)));
    auto inv = try_invert(lead);
    if (!inv)
      throw NonUnitLeadingCoefficient(
          "leading coefficient of b_" + std::to_string(k) +
          " is not invertible in the value ring");
    V acc = b.values[k];
    for (size_t j = 0; j < k; ++j) {
      C c = p.coeff(static_cast<int>(j));
      if (!qgen::is_zero(c)) acc = acc - value_cast<V>(c) * m[j];
    }
    m.push_back(acc * *inv);
  }
  return LinearFunctional<V>(std::move(name), std::move(m));
}

// L(F_{2k+1}(s)) = [k = 0].
inline LinearFunctional<Rational> make_L(int table_size) {
  FibFamily<Rational> fib(FibKind::classical);
  GradedBasis<Rational, Rational> b;
  for (int k = 0; k <= table_size; ++k) {
    b.polys.push_back(fib.poly(2 * k + 1));
    b.values.emplace_back(k == 0 ? 1 : 0);
  }
  return functional_from_graded_basis("L", b);
}

// M(F_{2n}(s)) = [n = 1], i.e. basis F_{2k+2} with value [k = 0].
inline LinearFunctional<Rational> make_M(int table_size) {
  FibFamily<Rational> fib(FibKind::classical);
  GradedBasis<Rational, Rational> b;
  for (int k = 0; k <= table_size; ++k) {
    b.polys.push_back(fib.poly(2 * k + 2));
    b.values.emplace_back(k == 0 ? 1 : 0);
  }
  return functional_from_graded_basis("M", b);
}

// V(x^n) = B_n for n != 1 and V(x) = 1/2; bernoulli[k] must hold B_k.
inline LinearFunctional<Rational> make_V(const std::vector<Rational>& bernoulli) {
  std::vector<Rational> m = bernoulli;
  if (m.size() > 1) m[1] = Rational(1, 2);
  return LinearFunctional<Rational>("V", std::move(m));
}

// q-analogue of L: L(F_{2k+1}(s, 1/q)) = [k = 0]. The leading coefficients
// q^{-k(k-1)} are units, so the values stay Laurent.
inline LinearFunctional<QLaurent> make_Lq(int table_size) {
  FibFamily<QLaurent> fib(FibKind::q_inverse);
  GradedBasis<QLaurent, QLaurent> b;
  for (int k = 0; k <= table_size; ++k) {
    b.polys.push_back(fib.poly(2 * k + 1));
    b.values.emplace_back(k == 0 ? 1 : 0);
  }
  return functional_from_graded_basis("Lq", b);
}

// q-analogue of M: M(F_{2n+2}(s, q)) = [n = 0], over rational functions.
inline LinearFunctional<QRatFn> make_Mq(int table_size) {
  FibFamily<QLaurent> fib(FibKind::q);
  GradedBasis<QLaurent, QRatFn> b;
  for (int k = 0; k <= table_size; ++k) {
    b.polys.push_back(fib.poly(2 * k + 2));
    b.values.emplace_back(k == 0 ? 1 : 0);
  }
  return functional_from_graded_basis("Mq", b);
}

}  // namespace qgen
