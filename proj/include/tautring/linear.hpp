#pragma once

// Small dense exact linear algebra over any field type K
// (BigRational or ParamFraction).

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tautring/exactalg.hpp"

namespace tautring {

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class K>
using Matrix = std::vector<std::vector<K>>;

/// Cofactor expansion along the first row. Divides only by nothing, so
/// denominators stay products of the entries' denominators.
template <class K>
K determinant_cofactor(const Matrix<K>& m) {
  const std::size_t n = m.size();
  if (n == 0) return K(1);
  if (n == 1) return m[0][0];
  K det(0);
  for (std::size_t col = 0; col < n; ++col) {
    if (is_zero(m[0][col])) continue;
    Matrix<K> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<K> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    K term = m[0][col] * determinant_cofactor(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

/// Determinant: cofactor expansion up to 4x4 (keeps rational-function
/// entries small), fraction-field Gaussian elimination beyond.
template <class K>
K determinant(Matrix<K> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n <= 4) return determinant_cofactor(m);
  K det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(m[piv][col])) ++piv;
    if (piv == n) return K(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      K f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// Solves a square system a * x = b. Throws SingularSystem.
template <class K>
std::vector<K> solve(Matrix<K> a, std::vector<K> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) throw SingularSystem("linear system is singular");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      K f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<K> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// Row-echelon reduction that remembers how each reduced row was formed.
/// combos[i][r] is the coefficient of input row r in reduced row i.
template <class K>
struct TrackedEchelon {
  Matrix<K> rows;
  Matrix<K> combos;
  std::vector<std::size_t> pivot_cols;
};

/// Eliminates from the first column onward; pivot i has a nonzero entry in
/// pivot_cols[i] and zeros in all earlier pivot columns of later rows.
template <class K>
TrackedEchelon<K> tracked_echelon(const Matrix<K>& input) {
  TrackedEchelon<K> out;
  const std::size_t nrows = input.size();
  if (nrows == 0) return out;
  const std::size_t ncols = input.front().size();
  Matrix<K> rows = input;
  Matrix<K> combos(nrows, std::vector<K>(nrows, K(0)));
  for (std::size_t i = 0; i < nrows; ++i) combos[i][i] = K(1);
  std::size_t top = 0;
  for (std::size_t col = 0; col < ncols && top < nrows; ++col) {
    std::size_t piv = top;
    while (piv < nrows && is_zero(rows[piv][col])) ++piv;
    if (piv == nrows) continue;
    std::swap(rows[piv], rows[top]);
    std::swap(combos[piv], combos[top]);
    for (std::size_t r = top + 1; r < nrows; ++r) {
      if (is_zero(rows[r][col])) continue;
      K f = rows[r][col] / rows[top][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[top][c];
      for (std::size_t c = 0; c < nrows; ++c) combos[r][c] -= f * combos[top][c];
    }
    out.pivot_cols.push_back(col);
    ++top;
  }
  rows.resize(top);
  combos.resize(top);
  out.rows = std::move(rows);
  out.combos = std::move(combos);
  return out;
}

/// Basis of {x : m x = 0}, one vector per free column of the reduced
/// row echelon form.
template <class K>
Matrix<K> nullspace(Matrix<K> m, std::size_t ncols) {
  const std::size_t nrows = m.size();
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t col = 0; col < ncols && top < nrows; ++col) {
    std::size_t piv = top;
    while (piv < nrows && is_zero(m[piv][col])) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[top]);
    K inv = K(1) / m[top][col];
    for (std::size_t c = col; c < ncols; ++c) m[top][c] *= inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == top || is_zero(m[r][col])) continue;
      K f = m[r][col];
      for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[top][c];
    }
    pivots.push_back(col);
    ++top;
  }
  Matrix<K> basis;
  std::size_t p = 0;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (p < pivots.size() && pivots[p] == free) {
      ++p;
      continue;
    }
    std::vector<K> v(ncols, K(0));
    v[free] = K(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank over K.
template <class K>
std::size_t rank(const Matrix<K>& m) {
  return tracked_echelon(m).pivot_cols.size();
}

}  // namespace tautring
