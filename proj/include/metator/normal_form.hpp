#pragma once

#include "matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace metator {

/// Row echelon Hermite normal form of the row space of `m`.
///
/// Rows of the result are a Z-basis of the lattice spanned by the rows of
/// `m`. Pivot columns strictly increase, pivots are positive, and entries
/// above a pivot lie in [0, pivot). Zero rows are dropped, so the result is
/// canonical: two generator sets span the same lattice iff their forms match.
inline Matrix hermite_rows(Matrix m) {
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  std::vector<Vector> rows;
  rows.reserve(nrows);
  for (std::size_t i = 0; i < nrows; ++i) rows.push_back(m.row(i));

  auto axpy = [&](std::size_t dst, const Int& k, std::size_t src) {
    if (k == 0) return;
    for (std::size_t c = 0; c < ncols; ++c) rows[dst][c] -= k * rows[src][c];
  };

  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    // Euclid down the column until a single nonzero entry remains.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < nrows; ++i) {
        if (rows[i][col] == 0) continue;
        if (!best || abs(rows[i][col]) < abs(rows[*best][col])) best = i;
      }
      if (!best) break;
      std::swap(rows[r], rows[*best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < nrows; ++i) {
        if (rows[i][col] == 0) continue;
        axpy(i, rows[i][col] / rows[r][col], r);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& v : rows[r]) v = -v;
    for (std::size_t i = 0; i < r; ++i) axpy(i, div_floor(rows[i][col], rows[r][col]), r);
    ++r;
  }
  rows.resize(r);
  return Matrix::from_rows(rows, ncols);
}

/// Column of the first nonzero entry of each row of an echelon matrix.
inline std::vector<std::size_t> pivot_columns(const Matrix& echelon) {
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < echelon.rows(); ++i) {
    std::size_t c = 0;
    while (c < echelon.cols() && echelon(i, c) == 0) ++c;
    piv.push_back(c);
  }
  return piv;
}

/// Basis (as columns) of { x in Z^c : a x = 0 }. Always saturated.
inline Matrix integer_kernel(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t c = a.cols();
  Matrix aug = Matrix::hstack(a.transpose(), Matrix::identity(c));
  Matrix h = hermite_rows(std::move(aug));
  std::vector<Vector> kernel;
  const auto piv = pivot_columns(h);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (piv[i] < m) continue;
    Vector v(c);
    for (std::size_t j = 0; j < c; ++j) v[j] = h(i, m + j);
    kernel.push_back(std::move(v));
  }
  if (kernel.empty()) return Matrix(c, 0);
  Matrix basis = hermite_rows(Matrix::from_rows(kernel, c));
  return basis.transpose();
}

/// Basis (as columns) of { x in Z^c : a x = 0 mod n }, a full-rank lattice.
inline Matrix kernel_mod(const Matrix& a, const Int& n) {
  if (n <= 0) throw error("kernel modulus must be positive");
  const std::size_t c = a.cols();
  if (a.rows() == 0) return Matrix::identity(c);
  Matrix stacked = Matrix::hstack(a, Matrix::identity(a.rows()) * n);
  Matrix k = integer_kernel(stacked);
  std::vector<Vector> gens;
  for (std::size_t j = 0; j < k.cols(); ++j) {
    Vector v(c);
    for (std::size_t i = 0; i < c; ++i) v[i] = k(i, j);
    gens.push_back(std::move(v));
  }
  return hermite_rows(Matrix::from_rows(gens, c)).transpose();
}

/// Smith normal form with unimodular transforms: `u * x * v == d`.
///
/// The diagonal is nonnegative and satisfies the divisibility chain
/// d_0 | d_1 | ... ; trailing zeros come last.
struct SmithForm {
  Vector diagonal;
  Matrix u, u_inv;
  Matrix v, v_inv;
  Matrix d;
};

inline SmithForm smith_form(const Matrix& x) {
  const std::size_t m = x.rows();
  const std::size_t c = x.cols();
  SmithForm s{{}, Matrix::identity(m), Matrix::identity(m), Matrix::identity(c),
              Matrix::identity(c), x};
  Matrix& d = s.d;

  // Elementary operations, each mirrored on the transform and its inverse.
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < c; ++k) std::swap(d(i, k), d(j, k));
    for (std::size_t k = 0; k < m; ++k) std::swap(s.u(i, k), s.u(j, k));
    for (std::size_t k = 0; k < m; ++k) std::swap(s.u_inv(k, i), s.u_inv(k, j));
  };
  auto add_row = [&](std::size_t i, std::size_t j, const Int& f) {  // row_i += f row_j
    if (f == 0) return;
    for (std::size_t k = 0; k < c; ++k) d(i, k) += f * d(j, k);
    for (std::size_t k = 0; k < m; ++k) s.u(i, k) += f * s.u(j, k);
    for (std::size_t k = 0; k < m; ++k) s.u_inv(k, j) -= f * s.u_inv(k, i);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t k = 0; k < c; ++k) d(i, k) = -d(i, k);
    for (std::size_t k = 0; k < m; ++k) s.u(i, k) = -s.u(i, k);
    for (std::size_t k = 0; k < m; ++k) s.u_inv(k, i) = -s.u_inv(k, i);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m; ++k) std::swap(d(k, i), d(k, j));
    for (std::size_t k = 0; k < c; ++k) std::swap(s.v(k, i), s.v(k, j));
    for (std::size_t k = 0; k < c; ++k) std::swap(s.v_inv(i, k), s.v_inv(j, k));
  };
  auto add_col = [&](std::size_t i, std::size_t j, const Int& f) {  // col_i += f col_j
    if (f == 0) return;
    for (std::size_t k = 0; k < m; ++k) d(k, i) += f * d(k, j);
    for (std::size_t k = 0; k < c; ++k) s.v(k, i) += f * s.v(k, j);
    for (std::size_t k = 0; k < c; ++k) s.v_inv(j, k) -= f * s.v_inv(i, k);
  };

  const std::size_t steps = std::min(m, c);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (d(i, j) == 0) continue;
          if (!best || abs(d(i, j)) < abs(d(best->first, best->second))) best = {i, j};
        }
      if (!best) break;
      swap_rows(t, best->first);
      swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        add_row(i, t, -(d(i, t) / d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        add_col(j, t, -(d(t, j) / d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain against the remaining block.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(i, j) % d(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      add_row(t, *offending, 1);
    }
    if (d(t, t) < 0) negate_row(t);
  }
  s.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) s.diagonal[t] = d(t, t);
  return s;
}

inline Int determinant(const Matrix& a) {
  if (!a.is_square()) throw dimension_error("determinant of non-square matrix");
  // Fraction-free Bareiss elimination.
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Matrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace metator
