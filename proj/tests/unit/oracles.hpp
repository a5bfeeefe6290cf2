#pragma once

// Test-only reference computations. Nothing here calls into the library's
// differentiation, elimination or enumeration code.

#include <gmpxx.h>

#include <cstddef>
#include <random>
#include <vector>

#include "fischerlab/linalg/matrix.hpp"
#include "fischerlab/polyring/poly.hpp"

namespace fischerlab::testing {

/// C(n, k) from Pascal's triangle.
inline std::size_t pascal_binomial(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return k > n ? 0 : t[n][k];
}

/// Counts exponent vectors of length d with sum <= n (or == n) by odometer.
inline std::size_t brute_force_count(std::size_t d, int n, bool homogeneous) {
  std::vector<int> e(d, 0);
  std::size_t count = 0;
  for (;;) {
    int sum = 0;
    for (int v : e) sum += v;
    if (homogeneous ? sum == n : sum <= n) ++count;
    std::size_t i = 0;
    while (i < d && ++e[i] > n) e[i++] = 0;
    if (i == d) return count;
  }
}

/// Evaluates p at a rational point term by term (Q only).
inline mpq_class eval_q(const Poly& p, const std::vector<mpq_class>& x) {
  mpq_class sum = 0;
  for (const auto& [m, c] : p.terms()) {
    mpq_class t = c.re();
    for (std::size_t i = 0; i < x.size(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= x[i];
    sum += t;
  }
  return sum;
}

/// Solves a small dense rational system by naive Gaussian elimination.
inline std::vector<mpq_class> naive_solve(std::vector<std::vector<mpq_class>> a,
                                          std::vector<mpq_class> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

/// Exact Laplacian of p at x: along each axis, interpolate the restriction
/// through deg+1 integer offsets and read off twice the t^2 coefficient.
inline mpq_class interpolated_laplacian_at(const Poly& p, const std::vector<mpq_class>& x) {
  if (p.is_zero()) return 0;
  const int deg = p.degree().value();
  const std::size_t n = static_cast<std::size_t>(deg) + 1;
  mpq_class total = 0;
  for (std::size_t axis = 0; axis < x.size(); ++axis) {
    std::vector<std::vector<mpq_class>> v(n, std::vector<mpq_class>(n));
    std::vector<mpq_class> g(n);
    for (std::size_t k = 0; k < n; ++k) {
      mpq_class t = static_cast<long>(k);
      mpq_class pw = 1;
      for (std::size_t j = 0; j < n; ++j) {
        v[k][j] = pw;
        pw *= t;
      }
      auto shifted = x;
      shifted[axis] += t;
      g[k] = eval_q(p, shifted);
    }
    const auto coeffs = naive_solve(v, g);
    if (n > 2) total += 2 * coeffs[2];
  }
  return total;
}

/// Determinant by fraction-free (Bareiss) elimination over mpq.
inline mpq_class bareiss_determinant(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).re();
  mpq_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Random polynomial with integer or small rational coefficients.
inline Poly random_poly(std::mt19937_64& rng, std::size_t arity, Field field, int max_degree,
                        int max_terms, bool rational = true) {
  std::uniform_int_distribution<int> deg(0, max_degree), coeff(-9, 9), den(1, 5),
      count(0, max_terms);
  Poly p(arity, field);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    const int d = deg(rng);
    std::vector<Monomial::Exponent> e(arity, 0);
    for (int k = 0; k < d; ++k) e[std::uniform_int_distribution<std::size_t>(0, arity - 1)(rng)]++;
    mpq_class re(coeff(rng), rational ? den(rng) : 1);
    mpq_class im = field == Field::Qi ? mpq_class(coeff(rng), rational ? den(rng) : 1) : mpq_class(0);
    re.canonicalize();
    im.canonicalize();
    p.add_term(Monomial(e), Scalar(field, re, im));
  }
  return p;
}

inline ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                 int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> entry(lo, hi);
  ExactMatrix m(rows, cols, Field::Q);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Scalar::from_int(Field::Q, entry(rng)));
  return m;
}

inline Scalar q(long num, unsigned long den = 1) { return Scalar::rational(Field::Q, num, den); }

}  // namespace fischerlab::testing
