#include "catch_amalgamated.hpp"

#include <map>

#include "qgen/gaussian.hpp"
#include "qgen/render.hpp"

using namespace qgen;

namespace {

// Independent oracle: build [n,k] purely from the q-Pascal recursion
// [n,k] = [n-1,k] + q^{n-k} [n-1,k-1] with map-based arithmetic.
QLaurent pascal_oracle(int n, int k) {
  static std::map<std::pair<int, int>, QLaurent> memo;
  if (k < 0 || k > n) return QLaurent();
  if (k == 0 || k == n) return QLaurent(1);
  auto it = memo.find({n, k});
  if (it != memo.end()) return it->second;
  QLaurent v =
      pascal_oracle(n - 1, k) + pascal_oracle(n - 1, k - 1).shifted(n - k);
  memo[{n, k}] = v;
  return v;
}

}  // namespace

TEST_CASE("reference values") {
  CHECK(render(gaussian_binomial(4, 2)) == "1 + q + 2*q^2 + q^3 + q^4");
  CHECK(render(gaussian_binomial(7, 0)) == "1");
  CHECK(render(gaussian_binomial(3, 2)) == "1 + q + q^2");
  CHECK(gaussian_binomial(3, 5).is_zero());
  CHECK(gaussian_binomial(5, -1).is_zero());
  CHECK(render(gaussian_binomial(5, 1)) == "1 + q + q^2 + q^3 + q^4");
}

TEST_CASE("agrees with the q-Pascal oracle") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(gaussian_binomial(n, k) == pascal_oracle(n, k));
}

TEST_CASE("q-Pascal rule") {
  for (int n = 1; n <= 20; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(gaussian_binomial(n, k) ==
            gaussian_binomial(n - 1, k) +
                gaussian_binomial(n - 1, k - 1).shifted(n - k));
}

TEST_CASE("specializes to binomial coefficients at q = 1") {
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(evaluate_at_q1(gaussian_binomial(n, k)) == Rational(binomial(n, k)));
  // including negative upper arguments
  for (int n = -8; n < 0; ++n)
    for (int k = 0; k <= 6; ++k)
      CHECK(evaluate_at_q1(gaussian_binomial(n, k)) == Rational(binomial(n, k)));
}

TEST_CASE("q-Vandermonde convolution") {
  for (int m = 0; m <= 6; ++m) {
    for (int r = 0; r <= 6; ++r) {
      for (int k = 0; k <= m + r; ++k) {
        QLaurent acc;
        for (int j = 0; j <= k; ++j)
          acc += (gaussian_binomial(m, j) * gaussian_binomial(r, k - j))
                     .shifted((k - j) * (m - j));
        CHECK(acc == gaussian_binomial(m + r, k));
      }
    }
  }
}

TEST_CASE("negative upper argument") {
  CHECK(render(gaussian_binomial(-1, 0)) == "1");
  // [-2, 1] = -q^-2 (1 + q)
  CHECK(render(gaussian_binomial(-2, 1)) == "-q^-2 - q^-1");
  // [-r, k] = (-1)^k q^{-kr - k(k-1)/2} [r+k-1, k]
  for (int r = 1; r <= 6; ++r) {
    for (int k = 0; k <= 6; ++k) {
      QLaurent expected =
          gaussian_binomial(r + k - 1, k).shifted(-(k * r + k * (k - 1) / 2));
      if (k % 2 == 1) expected = -expected;
      CHECK(gaussian_binomial(-r, k) == expected);
    }
  }
}

TEST_CASE("q-integers") {
  CHECK(render(q_integer(3)) == "1 + q + q^2");
  CHECK(q_integer(0).is_zero());
  CHECK(render(q_integer(1)) == "1");
}
