#include "catch_amalgamated.hpp"

#include "qgen/render.hpp"
#include "qgen/tables.hpp"

using namespace qgen;

using SR = SLaurent<Rational>;
using SQ = SLaurent<QLaurent>;

TEST_CASE("L monomial values") {
  auto L = make_L(4);
  CHECK(L.monomial_value(0) == 1);
  CHECK(L.monomial_value(1) == -1);
  CHECK(L.monomial_value(2) == 2);
  CHECK(L.monomial_value(3) == -8);
  CHECK(L.monomial_value(4) == 56);
  CHECK(L(fib_poly(6)) == 3);
}

TEST_CASE("M monomial values") {
  auto M = make_M(4);
  CHECK(M.monomial_value(0) == 1);
  CHECK(M.monomial_value(1) == make_rational(-1, 2));
  CHECK(M(fib_poly(3)) == make_rational(1, 2));
}

TEST_CASE("V functional") {
  auto V = make_V(bernoulli(6));
  CHECK(V.monomial_value(0) == 1);
  CHECK(V.monomial_value(1) == make_rational(1, 2));  // overrides B_1
  CHECK(V.monomial_value(2) == make_rational(1, 6));
  CHECK(V.monomial_value(3) == 0);
}

TEST_CASE("q-analogue of L") {
  auto Lq = make_Lq(3);
  CHECK(Lq.monomial_value(0) == QLaurent(1));
  CHECK(Lq.monomial_value(1) == QLaurent(-1));
  CHECK(Lq.monomial_value(2) == QLaurent(1) + QLaurent::q_power(1));
  CHECK(render(Lq.monomial_value(3)) ==
        "-1 - 2*q - 2*q^2 - 2*q^3 - q^4");
}

TEST_CASE("q-analogue of M lives over rational functions") {
  auto Mq = make_Mq(3);
  CHECK(render(Mq(q_fib_poly(3))) == "q/(1 + q)");
  CHECK(render(Mq.monomial_value(1)) == "-1/(1 + q)");
  // over Laurent values the leading coefficients [k+1]_q are not units
  FibFamily<QLaurent> fib(FibKind::q);
  GradedBasis<QLaurent, QLaurent> narrow;
  for (int k = 0; k <= 2; ++k) {
    narrow.polys.push_back(fib.poly(2 * k + 2));
    narrow.values.emplace_back(k == 0 ? 1 : 0);
  }
  CHECK_THROWS_AS(functional_from_graded_basis("Mq-narrow", narrow),
                  NonUnitLeadingCoefficient);
}

TEST_CASE("defining values are reproduced") {
  int N = 8;
  FibFamily<Rational> fib(FibKind::classical);
  FibFamily<QLaurent> qfib(FibKind::q), qinv(FibKind::q_inverse);
  auto L = make_L(N);
  auto M = make_M(N);
  auto Lq = make_Lq(N);
  auto Mq = make_Mq(N);
  for (int k = 0; k <= N; ++k) {
    CHECK(L(fib.poly(2 * k + 1)) == Rational(k == 0 ? 1 : 0));
    CHECK(M(fib.poly(2 * k + 2)) == Rational(k == 0 ? 1 : 0));
    CHECK(Lq(qinv.poly(2 * k + 1)) == QLaurent(k == 0 ? 1 : 0));
    CHECK(Mq(qfib.poly(2 * k + 2)) == QRatFn(k == 0 ? 1 : 0));
  }
}

TEST_CASE("application is linear") {
  auto L = make_L(6);
  SR p = fib_poly(6) * Rational(3) - fib_poly(5) * make_rational(1, 2);
  CHECK(L(p) == Rational(3) * L(fib_poly(6)) -
                    make_rational(1, 2) * L(fib_poly(5)));
}

TEST_CASE("error paths") {
  auto L = make_L(3);
  CHECK_THROWS_AS(L(fib_poly(20)), DegreeExceedsTable);
  CHECK_THROWS_AS(L(SR::s_power(-1)), NegativeOffset);
  CHECK_THROWS_AS(L.monomial_value(9), DegreeExceedsTable);
  // graded basis with a degree gap is rejected
  GradedBasis<Rational, Rational> bad;
  bad.polys.push_back(SR(1));
  bad.polys.push_back(SR::s_power(2));  // degree 2 in slot 1
  bad.values.emplace_back(1);
  bad.values.emplace_back(0);
  CHECK_THROWS_AS(functional_from_graded_basis("bad", bad), Error);
}

TEST_CASE("degenerate zero polynomial") {
  auto L = make_L(2);
  CHECK(L(SR()) == 0);
}
