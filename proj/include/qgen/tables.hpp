#pragma once

#include <vector>

#include "qgen/functional.hpp"

namespace qgen {

// Ragged 1-indexed array g_{i,j}, row i holding j = 1..ceil(i/2). Reads
// outside the j-range return zero, matching the boundary convention of the
// defining recursions.
template <class C>
class Triangle {
 public:
  Triangle() = default;

  int rows() const { return static_cast<int>(rows_.size()); }

  static int row_length(int i) { return (i + 1) / 2; }

  // Zero-padded read; row index must be stored.
  C at(int i, int j) const {
    if (i < 1 || i > rows())
      throw Error("Triangle: row " + std::to_string(i) + " not generated");
    const auto& row = rows_[static_cast<size_t>(i) - 1];
    if (j < 1 || j > static_cast<int>(row.size())) return C(0);
    return row[static_cast<size_t>(j) - 1];
  }

  std::vector<C>& row(int i) { return rows_[static_cast<size_t>(i) - 1]; }
  const std::vector<C>& row(int i) const {
    return rows_[static_cast<size_t>(i) - 1];
  }

  void append_row(std::vector<C> r) { rows_.push_back(std::move(r)); }

 private:
  std::vector<std::vector<C>> rows_;
};

// Boustrophedon Seidel triangle for the Genocchi numbers: odd rows accumulate
// left to right, even rows right to left.
inline Triangle<Integer> seidel_triangle(int rows) {
  if (rows < 1) throw Error("seidel_triangle: need at least one row");
  Triangle<Integer> t;
  t.append_row({1});
  for (int i = 2; i <= rows; ++i) {
    int len = Triangle<Integer>::row_length(i);
    std::vector<Integer> row(static_cast<size_t>(len));
    if (i % 2 == 0) {
      // g_{2i,j} = g_{2i,j+1} + g_{2i-1,j}, filled j = len..1.
      Integer right = 0;
      for (int j = len; j >= 1; --j) {
        right += t.at(i - 1, j);
        row[static_cast<size_t>(j) - 1] = right;
      }
    } else {
      // g_{2i+1,j} = g_{2i+1,j-1} + g_{2i,j}, filled j = 1..len.
      Integer left = 0;
      for (int j = 1; j <= len; ++j) {
        left += t.at(i - 1, j);
        row[static_cast<size_t>(j) - 1] = left;
      }
    }
    t.append_row(std::move(row));
  }
  return t;
}

// q-Seidel triangle: g_{2n,k} = g_{2n,k+1} + q^{k-1} g_{2n-1,k} filled right
// to left, g_{2n+1,k} = q^{k-1} g_{2n,k} + g_{2n+1,k-1} filled left to right.
// TODO: entries become dense in q past ~80 rows; a flat coefficient vector
// per entry would cut the map overhead there.
inline Triangle<QLaurent> q_seidel_triangle(int rows) {
  if (rows < 1) throw Error("q_seidel_triangle: need at least one row");
  Triangle<QLaurent> t;
  t.append_row({QLaurent(1)});
  for (int i = 2; i <= rows; ++i) {
    int len = Triangle<QLaurent>::row_length(i);
    std::vector<QLaurent> row(static_cast<size_t>(len));
    if (i % 2 == 0) {
      QLaurent right;
      for (int j = len; j >= 1; --j) {
        right += t.at(i - 1, j).shifted(j - 1);
        row[static_cast<size_t>(j) - 1] = right;
      }
    } else {
      QLaurent left;
      for (int j = 1; j <= len; ++j) {
        left = t.at(i - 1, j).shifted(j - 1) + left;
        row[static_cast<size_t>(j) - 1] = left;
      }
    }
    t.append_row(std::move(row));
  }
  return t;
}

// Genocchi numbers G_2..G_{2N}, read off the odd-row tails g_{2n-1,n}.
inline std::vector<Integer> genocchi(int N, const Triangle<Integer>& tri) {
  std::vector<Integer> g;
  g.reserve(static_cast<size_t>(N));
  for (int n = 1; n <= N; ++n) g.push_back(tri.at(2 * n - 1, n));
  return g;
}

inline std::vector<Integer> genocchi(int N) {
  if (N < 1) throw Error("genocchi: need N >= 1");
  return genocchi(N, seidel_triangle(2 * N - 1));
}

// Bernoulli numbers B_0..B_N from the defining recursion: for n > 1 the
// identity B_n = sum_k binom(n,k) B_k pins the single new unknown B_{n-1}.
inline std::vector<Rational> bernoulli(int N) {
  if (N < 0) throw Error("bernoulli: need N >= 0");
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= N; ++m) {
    Rational acc = 0;
    for (int k = 0; k < m; ++k)
      acc += Rational(binomial(m + 1, k)) * b[static_cast<size_t>(k)];
    b.push_back(-acc / (m + 1));
  }
  return b;
}

// Median Genocchi numbers H_1, H_3, ..., H_{2N-1} = g_{2n+1,1}.
inline std::vector<Integer> median_genocchi(int N, const Triangle<Integer>& tri) {
  std::vector<Integer> h;
  h.reserve(static_cast<size_t>(N));
  for (int n = 0; n < N; ++n) h.push_back(tri.at(2 * n + 1, 1));
  return h;
}

inline std::vector<Integer> median_genocchi(int N) {
  if (N < 1) throw Error("median_genocchi: need N >= 1");
  return median_genocchi(N, seidel_triangle(2 * N - 1));
}

// Coefficients of the even Fibonacci polynomials in the odd basis:
// a(n,k) = (-1)^{n-k-1} binom(2n,2k) G_{2n-2k} / (2k+1), rows n = 1..n_max,
// columns k = 0..n_max-1. Computed as exact rationals; integrality is a
// theorem and is checked here, not assumed.
inline std::vector<std::vector<Rational>> a_matrix(int n_max) {
  if (n_max < 1) throw Error("a_matrix: need n_max >= 1");
  std::vector<Integer> G = genocchi(n_max);
  std::vector<std::vector<Rational>> m;
  m.reserve(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Rational> row;
    row.reserve(static_cast<size_t>(n_max));
    for (int k = 0; k < n_max; ++k) {
      if (k >= n) {
        row.emplace_back(0);
        continue;
      }
      Rational v = Rational(binomial(2 * n, 2 * k)) *
                   Rational(G[static_cast<size_t>(n - k) - 1]) /
                   Rational(2 * k + 1);
      if ((n - k) % 2 == 0) v = -v;
      if (denominator(v) != 1)
        throw Error("a_matrix: entry (" + std::to_string(n) + "," +
                    std::to_string(k) + ") is not integral");
      row.push_back(v);
    }
    m.push_back(std::move(row));
  }
  return m;
}

// q-Genocchi polynomials G_{2n}(q) = g_{2n-1,n}(q).
inline std::vector<QLaurent> q_genocchi(int N, const Triangle<QLaurent>& tri) {
  std::vector<QLaurent> g;
  g.reserve(static_cast<size_t>(N));
  for (int n = 1; n <= N; ++n) g.push_back(tri.at(2 * n - 1, n));
  return g;
}

inline std::vector<QLaurent> q_genocchi(int N) {
  if (N < 1) throw Error("q_genocchi: need N >= 1");
  return q_genocchi(N, q_seidel_triangle(2 * N - 1));
}

// q-median Genocchi H_{2n-1}(q) = q^{n-2} g_{2n-1,1}(q); H_1(q) = 1/q is
// genuinely Laurent.
inline std::vector<QLaurent> q_median_genocchi(int N,
                                               const Triangle<QLaurent>& tri) {
  std::vector<QLaurent> h;
  h.reserve(static_cast<size_t>(N));
  for (int n = 1; n <= N; ++n) h.push_back(tri.at(2 * n - 1, 1).shifted(n - 2));
  return h;
}

inline std::vector<QLaurent> q_median_genocchi(int N) {
  if (N < 1) throw Error("q_median_genocchi: need N >= 1");
  return q_median_genocchi(N, q_seidel_triangle(2 * N - 1));
}

// The classical number sequences bundled for cross-checks. G and H come from
// the boustrophedon triangle (the primary integer source), B from the
// recursion, and g_n are the exponential generating function coefficients
// g_1 = 1, g_{2n} = (-1)^n G_{2n}, other odd ones zero.
struct NumberTable {
  std::vector<Integer> G;   // G[n-1] = G_{2n}
  std::vector<Rational> B;  // B[n] = B_n
  std::vector<Integer> H;   // H[n] = H_{2n+1}
  std::vector<Integer> g;   // g[n] = g_n

  static NumberTable make(int genocchi_count, int bernoulli_max) {
    NumberTable t;
    Triangle<Integer> tri = seidel_triangle(2 * genocchi_count - 1);
    t.G = genocchi(genocchi_count, tri);
    t.B = bernoulli(bernoulli_max);
    t.H = median_genocchi(genocchi_count, tri);
    t.g.assign(static_cast<size_t>(genocchi_count) * 2, Integer(0));
    t.g[1] = 1;
    for (int n = 1; n < genocchi_count; ++n) {
      Integer v = t.G[static_cast<size_t>(n) - 1];
      t.g[static_cast<size_t>(n) * 2] = (n % 2 == 0) ? v : -v;
    }
    return t;
  }
};

// Seidel matrix with the q-weighted recursion
//   a_{n,k} = q^{n-1} (a_{n,k-1} + a_{n+1,k-1})
// over a seed column a_{n,0} = c_n, n = 1..depth. Entries exist for
// n >= 1, k >= 0, n + k <= depth. Construction cross-checks every entry
// against the closed form
//   a_{n,k} = q^{k(n-1)} sum_j q^{binom(j,2)} [k,j] a_{n+j,0}.
class QSeidelMatrix {
 public:
  QSeidelMatrix(std::vector<QLaurent> seed, int depth)
      : seed_(std::move(seed)), depth_(depth) {
    if (depth_ < 1) throw Error("QSeidelMatrix: need depth >= 1");
    if (static_cast<int>(seed_.size()) < depth_)
      throw SeedTooShort("seed has " + std::to_string(seed_.size()) +
                         " values, depth " + std::to_string(depth_) +
                         " requires as many");
    columns_.push_back(
        std::vector<QLaurent>(seed_.begin(), seed_.begin() + depth_));
    for (int k = 1; k < depth_; ++k) {
      const auto& prev = columns_.back();
      std::vector<QLaurent> col;
      col.reserve(prev.size() - 1);
      for (size_t i = 0; i + 1 < prev.size(); ++i)
        col.push_back((prev[i] + prev[i + 1]).shifted(static_cast<int>(i)));
      columns_.push_back(std::move(col));
    }
    for (int n = 1; n <= depth_; ++n)
      for (int k = 0; n + k <= depth_; ++k)
        if (entry(n, k) != closed_form(n, k))
          throw Error("QSeidelMatrix: closed form mismatch at (" +
                      std::to_string(n) + "," + std::to_string(k) + ")");
  }

  int depth() const { return depth_; }

  const QLaurent& entry(int n, int k) const {
    if (n < 1 || k < 0 || n + k > depth_)
      throw Error("QSeidelMatrix: entry (" + std::to_string(n) + "," +
                  std::to_string(k) + ") out of range");
    return columns_[static_cast<size_t>(k)][static_cast<size_t>(n) - 1];
  }

  QLaurent closed_form(int n, int k) const {
    QLaurent acc;
    for (int j = 0; j <= k; ++j) {
      QLaurent term = gaussian_binomial(k, j).shifted(j * (j - 1) / 2) *
                      seed_[static_cast<size_t>(n + j) - 1];
      acc += term;
    }
    return acc.shifted(k * (n - 1));
  }

 private:
  std::vector<QLaurent> seed_;
  int depth_;
  std::vector<std::vector<QLaurent>> columns_;  // columns_[k][n-1]
};

// Seed c_n = L((-1)^{n-1} F_n(s, 1/q)) for n = 1..depth.
inline std::vector<QLaurent> q_seidel_seed(int depth,
                                           const LinearFunctional<QLaurent>& Lq) {
  FibFamily<QLaurent> fib(FibKind::q_inverse);
  std::vector<QLaurent> seed;
  seed.reserve(static_cast<size_t>(depth));
  for (int n = 1; n <= depth; ++n) {
    QLaurent v = Lq(fib.poly(n));
    seed.push_back(n % 2 == 0 ? -v : v);
  }
  return seed;
}

}  // namespace qgen
