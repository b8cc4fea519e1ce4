#include "burnside/linalg.hpp"

#include <algorithm>

namespace burnside {

ZMatrix to_zmatrix(const std::vector<std::vector<long long>>& m) {
  ZMatrix z(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (long long v : m[i]) z[i].emplace_back(static_cast<long>(v));
  return z;
}

Integer determinant(ZMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<Integer> smith_invariants(ZMatrix m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          clean = false;
          if (abs(m[i][t]) < abs(m[t][t])) std::swap(m[i], m[t]);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          clean = false;
          if (abs(m[t][j]) < abs(m[t][t]))
            for (auto& row : m) std::swap(row[t], row[j]);
        }
      }
      if (!clean) continue;
      // Divisibility: fold a row whose entries the pivot does not divide.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

std::vector<unsigned long> p_exponents(const std::vector<Integer>& values, unsigned long p) {
  std::vector<unsigned long> out;
  for (const auto& v : values) {
    if (v == 0) continue;
    Integer w = abs(v);
    unsigned long e = 0;
    while (mpz_divisible_ui_p(w.get_mpz_t(), p)) {
      mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Rational>> solve_left(const QMatrix& a, const std::vector<Rational>& b) {
  // x A = b  <=>  A^T x^T = b^T
  const std::size_t n = a.size();
  QMatrix m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[j][i];
    m[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[c], m[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

}  // namespace burnside
