#include "catch_amalgamated.hpp"

#include "qgen/fib.hpp"
#include "qgen/render.hpp"

using namespace qgen;

using SR = SLaurent<Rational>;
using SQ = SLaurent<QLaurent>;

namespace {

// Explicit-sum oracles, independent of the recursion-based family cache.
SR fib_sum(int n) {
  SR p;
  for (long k = 0; 2 * k <= n - 1; ++k) {
    Integer c = binomial(n - k - 1, k);
    if (c != 0) p += SR::s_power(static_cast<int>(k), Rational(c));
  }
  return p;
}

SQ q_fib_sum(int n) {
  SQ p;
  for (long k = 0; 2 * k <= n - 1; ++k) {
    QLaurent c =
        gaussian_binomial(n - 1 - k, k).shifted(static_cast<int>(k * (k - 1)));
    if (!c.is_zero()) p += SQ::s_power(static_cast<int>(k), c);
  }
  return p;
}

// The closed form for the q -> 1/q family.
SQ q_fib_inv_sum(int n) {
  SQ p;
  for (long k = 0; 2 * k <= n - 1; ++k) {
    QLaurent c = gaussian_binomial(n - 1 - k, k)
                     .shifted(static_cast<int>(k * k + 2 * k - n * k));
    if (!c.is_zero()) p += SQ::s_power(static_cast<int>(k), c);
  }
  return p;
}

}  // namespace

TEST_CASE("classical values") {
  CHECK(fib_poly(0).is_zero_poly());
  CHECK(fib_poly(1) == SR(1));
  CHECK(render(fib_poly(5)) == "1 + 3*s + s^2");
  CHECK(fib_poly(-1) == SR::s_power(-1));
  FibFamily<Rational> fam(FibKind::classical);
  CHECK_THROWS_AS(fam.poly(-2), IndexOutOfRange);
}

TEST_CASE("classical recursion matches the explicit sum") {
  for (int n = 0; n <= 40; ++n) CHECK(fib_poly(n) == fib_sum(n));
}

TEST_CASE("classical recursion residual vanishes, including index -1") {
  FibFamily<Rational> fam(FibKind::classical);
  for (int n = 1; n <= 40; ++n) {
    SR residual =
        fam.poly(n) - fam.poly(n - 1) - SR::s_power(1) * fam.poly(n - 2);
    CHECK(residual.is_zero_poly());
  }
}

TEST_CASE("q values") {
  CHECK(q_fib_poly(2) == SQ(1));
  CHECK(render(q_fib_poly(4)) == "1 + (1 + q)*s");
  CHECK(q_fib_poly(-1) == SQ::s_power(-1, QLaurent::q_power(2)));
  FibFamily<QLaurent> fam(FibKind::q);
  CHECK_THROWS_AS(fam.poly(-5), IndexOutOfRange);
}

TEST_CASE("q recursion matches the explicit sum") {
  for (int n = 0; n <= 24; ++n) CHECK(q_fib_poly(n) == q_fib_sum(n));
}

TEST_CASE("q recursion residual vanishes, including index -1") {
  FibFamily<QLaurent> fam(FibKind::q);
  for (int n = 1; n <= 24; ++n) {
    SQ residual = fam.poly(n) - fam.poly(n - 1) -
                  SQ::s_power(1, QLaurent::q_power(n - 3)) * fam.poly(n - 2);
    CHECK(residual.is_zero_poly());
  }
}

TEST_CASE("q -> 1/q family") {
  CHECK(q_fib_poly_inv(3) == SQ(1) + SQ::s_power(1));
  CHECK(render(q_fib_poly_inv(4)) == "1 + (q^-1 + 1)*s");
  CHECK(render(q_fib_poly_inv(5)) == "1 + (q^-2 + q^-1 + 1)*s + q^-2*s^2");
  // coefficient-wise exponent negation of the q family
  for (int n = -1; n <= 24; ++n)
    CHECK(q_fib_poly_inv(n) == substitute_q_inverse(q_fib_poly(n)));
  // and the closed-form sum
  for (int n = 0; n <= 24; ++n) CHECK(q_fib_poly_inv(n) == q_fib_inv_sum(n));
}

TEST_CASE("degrees") {
  for (int n = 1; n <= 40; ++n) CHECK(fib_poly(n).degree() == (n - 1) / 2);
  for (int n = 1; n <= 24; ++n) {
    CHECK(q_fib_poly(n).degree() == (n - 1) / 2);
    CHECK(q_fib_poly_inv(n).degree() == (n - 1) / 2);
  }
}

TEST_CASE("leading coefficient of odd q polynomials") {
  // top s-coefficient of F_{2k+1}(s,q) is q^{k(k-1)}; this is what makes the
  // triangular solve for the q-functionals exact over Laurent polynomials.
  for (int k = 0; k <= 10; ++k) {
    SQ f = q_fib_poly(2 * k + 1);
    CHECK(f.coeff(k) == QLaurent::q_power(k * (k - 1)));
  }
}

TEST_CASE("alternating binomial sums annihilate") {
  for (long n = 0; n <= 15; ++n) {
    SR acc;
    for (long k = 0; k <= n; ++k) {
      SR t = fib_poly(static_cast<int>(2 * n - k)) * Rational(binomial(n, k));
      acc += (k % 2 == 0) ? t : -t;
    }
    CHECK(acc.is_zero_poly());
  }
  for (long n = 0; n <= 10; ++n) {
    SQ acc;
    for (long k = 0; k <= n; ++k) {
      QLaurent c = gaussian_binomial(n, k).shifted(
          static_cast<int>(k * (k - 1) / 2));
      if (k % 2 == 1) c = -c;
      acc += q_fib_poly(static_cast<int>(2 * n - k)) * c;
    }
    CHECK(acc.is_zero_poly());
  }
}

TEST_CASE("q = 1 specialization") {
  for (int n = -1; n <= 24; ++n) {
    CHECK(specialize_q1(q_fib_poly(n)) == fib_poly(n));
    CHECK(specialize_q1(q_fib_poly_inv(n)) == fib_poly(n));
  }
}
