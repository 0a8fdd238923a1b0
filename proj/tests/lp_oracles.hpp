#pragma once
// Brute-force optima over vertex sets, independent of the simplex solver.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "bclab/bar_complex.hpp"
#include "bclab/finite_group.hpp"

namespace bclab::oracle {

using IntMatrix = std::vector<std::vector<long>>;
using QMatrix = std::vector<std::vector<mpq_class>>;

/// Calls visit on every k-subset of {0..n-1}; stops early when visit returns false.
inline void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!visit(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Fraction-free determinant (Bareiss); exact for the small integer matrices used here.
inline __int128 bareiss_det(std::vector<std::vector<__int128>> m) {
  const std::size_t n = m.size();
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Indices of a maximal independent row subset (exact elimination), i.e. a row basis.
inline std::vector<int> independent_rows(const QMatrix& rows) {
  std::vector<int> chosen;
  std::vector<std::vector<mpq_class>> basis;  // reduced rows with their pivot columns
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<mpq_class> v = rows[r];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (v[pivots[b]] == 0) continue;
      const mpq_class f = v[pivots[b]] / basis[b][pivots[b]];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[b][j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const mpq_class& x) { return x != 0; });
    if (it == v.end()) continue;
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    basis.push_back(std::move(v));
    chosen.push_back(static_cast<int>(r));
  }
  return chosen;
}

/// Bar differential from degree n+1 to degree n as an integer matrix, built from
/// the face formula directly (rows: n-tuples, columns: (n+1)-tuples).
inline IntMatrix boundary_matrix(const FiniteGroup& G, int n) {
  const int q = G.order();
  long rows = 1, cols = q;
  for (int i = 0; i < n; ++i) rows *= q, cols *= q;
  IntMatrix D(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(cols), 0));
  for (long col = 0; col < cols; ++col) {
    std::vector<int> g(static_cast<std::size_t>(n + 1));
    long rest = col;
    for (int i = n; i >= 0; --i) g[static_cast<std::size_t>(i)] = static_cast<int>(rest % q), rest /= q;
    for (int i = 0; i <= n + 1; ++i) {
      std::vector<int> face;
      if (i == 0) {
        face.assign(g.begin() + 1, g.end());
      } else if (i == n + 1) {
        face.assign(g.begin(), g.end() - 1);
      } else {
        for (int j = 0; j <= n; ++j) {
          if (j == i - 1) {
            face.push_back(G.mul(g[static_cast<std::size_t>(j)], g[static_cast<std::size_t>(j + 1)]));
            ++j;
          } else {
            face.push_back(g[static_cast<std::size_t>(j)]);
          }
        }
      }
      long row = 0;
      for (int x : face) row = row * q + x;
      D[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] += (i % 2 ? -1 : 1);
    }
  }
  return D;
}

/// min ||c||_1 subject to D c = z, by enumerating bases of the column space.
/// z must lie in the column space and have integer entries.
inline std::optional<mpq_class> l1_vertex_minimum(const IntMatrix& D, const std::vector<long>& z) {
  const std::size_t m = D.size(), N = D.empty() ? 0 : D[0].size();
  if (std::all_of(z.begin(), z.end(), [](long v) { return v == 0; })) return mpq_class(0);
  QMatrix q(m, std::vector<mpq_class>(N));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < N; ++j) q[i][j] = D[i][j];
  const std::vector<int> R = independent_rows(q);
  const int r = static_cast<int>(R.size());
  // Columns that agree up to sign give the same candidate values.
  std::vector<std::vector<long>> cols;
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<long> c;
    for (int i : R) c.push_back(D[static_cast<std::size_t>(i)][j]);
    if (std::all_of(c.begin(), c.end(), [](long v) { return v == 0; })) continue;
    std::vector<long> neg(c);
    for (auto& v : neg) v = -v;
    if (std::find(cols.begin(), cols.end(), c) != cols.end() || std::find(cols.begin(), cols.end(), neg) != cols.end())
      continue;
    cols.push_back(c);
  }
  std::optional<mpq_class> best;
  for_each_subset(static_cast<int>(cols.size()), r, [&](const std::vector<int>& S) {
    std::vector<std::vector<__int128>> M(static_cast<std::size_t>(r), std::vector<__int128>(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            cols[static_cast<std::size_t>(S[static_cast<std::size_t>(j)])][static_cast<std::size_t>(i)];
    const __int128 det = bareiss_det(M);
    if (det == 0) return true;
    __int128 num = 0;  // sum of |Cramer numerators|
    for (int j = 0; j < r; ++j) {
      auto Mj = M;
      for (int i = 0; i < r; ++i) Mj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = z[static_cast<std::size_t>(R[static_cast<std::size_t>(i)])];
      const __int128 dj = bareiss_det(Mj);
      num += dj < 0 ? -dj : dj;
    }
    const __int128 den = det < 0 ? -det : det;
    const mpq_class value(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    if (!best || value < *best) best = value;
    return true;
  });
  if (best) best->canonicalize();
  return best;
}

/// Solves the square-or-tall system M x = rhs exactly; nullopt unless the solution is unique.
inline std::optional<std::vector<mpq_class>> solve_unique(QMatrix M, std::vector<mpq_class> rhs) {
  const std::size_t rows = M.size(), n = M.empty() ? 0 : M[0].size();
  std::size_t row = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t col = 0; col < n && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && M[p][col] == 0) ++p;
    if (p == rows) return std::nullopt;
    std::swap(M[p], M[row]);
    std::swap(rhs[p], rhs[row]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || M[i][col] == 0) continue;
      const mpq_class f = M[i][col] / M[row][col];
      for (std::size_t j = col; j < n; ++j) M[i][j] -= f * M[row][j];
      rhs[i] -= f * rhs[row];
    }
    pivcol.push_back(col);
    ++row;
  }
  if (pivcol.size() != n) return std::nullopt;
  for (std::size_t i = n; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / M[i][i];
  return x;
}

/// min ||b||_inf over invariant b with delta b = c, by enumerating vertices of
/// {(b, t) : E b = c, -t <= b_j <= t}. Columns of E are coboundaries of the
/// invariant unit cochains; rows are the inhomogeneous entries of the result.
inline std::optional<mpq_class> linf_vertex_minimum(const FiniteGroup& G, const Cochain& c) {
  const int n = c.degree();
  const std::size_t m = static_cast<std::size_t>(checked_power(G.order(), n - 1));
  const InhomogeneousCochain target = to_inhomogeneous(G, c);
  const std::size_t rows = target.values.size();
  QMatrix E(rows, std::vector<mpq_class>(m));
  for (std::size_t j = 0; j < m; ++j) {
    InhomogeneousCochain unit{n - 1, G.order(), std::vector<mpq_class>(m)};
    unit.values[j] = 1;
    const InhomogeneousCochain col = to_inhomogeneous(G, coboundary(G, to_homogeneous(G, unit)));
    for (std::size_t i = 0; i < rows; ++i) E[i][j] = col.values[i];
  }
  const std::vector<int> R = independent_rows(E);
  const std::size_t r = R.size();
  const std::size_t k = m + 1 - r;  // active inequalities needed for a vertex
  std::optional<mpq_class> best;
  for_each_subset(static_cast<int>(2 * m), static_cast<int>(k), [&](const std::vector<int>& S) {
    QMatrix M;
    std::vector<mpq_class> rhs;
    for (std::size_t i = 0; i < rows; ++i) {  // all rows, so consistency is checked too
      std::vector<mpq_class> row(E[i]);
      row.push_back(0);
      M.push_back(row);
      rhs.push_back(target.values[i]);
    }
    for (int s : S) {
      std::vector<mpq_class> row(m + 1, 0);
      row[static_cast<std::size_t>(s) % m] = 1;
      row[m] = s < static_cast<int>(m) ? -1 : 1;  // b_j = t or b_j = -t
      M.push_back(row);
      rhs.push_back(0);
    }
    auto x = solve_unique(M, rhs);
    if (!x) return true;
    const mpq_class t = (*x)[m];
    for (std::size_t j = 0; j < m; ++j)
      if (abs((*x)[j]) > t) return true;
    if (!best || t < *best) best = t;
    return true;
  });
  return best;
}

}  // namespace bclab::oracle
