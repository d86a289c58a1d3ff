#pragma once

// Small dense linear algebra. Determinants work over any commutative ring
// (rationals, polynomials, ordered-field elements); elimination routines are
// over the rationals.

#include <cstddef>
#include <string>
#include <vector>

#include "shintani/errors.hpp"
#include "shintani/exactnum/rat.hpp"

namespace shintani {

template <class T>
using Vec = std::vector<T>;

/// Row-major square or rectangular matrix.
template <class T>
using Matrix = std::vector<std::vector<T>>;

using QVec = Vec<Rat>;
using QMat = Matrix<Rat>;

inline QMat identity_matrix(std::size_t n) {
  QMat m(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

template <class T>
Matrix<T> from_columns(const std::vector<Vec<T>>& cols) {
  if (cols.empty()) return {};
  const std::size_t rows = cols[0].size();
  Matrix<T> m(rows, Vec<T>(cols.size(), cols[0][0]));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) fail(ErrorCode::invalid_argument, "columns of unequal length");
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  }
  return m;
}

template <class T>
Vec<T> column(const Matrix<T>& m, std::size_t j) {
  Vec<T> c;
  c.reserve(m.size());
  for (const auto& row : m) c.push_back(row[j]);
  return c;
}

/// Determinant by cofactor expansion with memoisation over column subsets:
/// O(2^n n) ring multiplications and no divisions.
template <class T>
T determinant(const Matrix<T>& m) {
  const std::size_t n = m.size();
  if (n == 0) fail(ErrorCode::invalid_argument, "determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) fail(ErrorCode::invalid_argument, "determinant of a non-square matrix");
  if (n > 20) fail(ErrorCode::invalid_argument, "matrix too large for exact cofactor expansion");
  // minor[S] = determinant of rows n-|S|..n-1 restricted to the columns in S.
  const T zero = m[0][0] - m[0][0];
  std::vector<T> minor(std::size_t{1} << n, zero);
  for (std::size_t j = 0; j < n; ++j) minor[std::size_t{1} << j] = m[n - 1][j];
  for (std::size_t s = 1; s < minor.size(); ++s) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(s));
    if (k < 2) continue;
    const std::size_t row = n - k;
    T acc = zero;
    int parity = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(s & (std::size_t{1} << j))) continue;
      const T& a = m[row][j];
      const T& sub = minor[s & ~(std::size_t{1} << j)];
      if (parity % 2 == 0) {
        acc += a * sub;
      } else {
        acc -= a * sub;
      }
      ++parity;
    }
    minor[s] = acc;
  }
  return minor.back();
}

/// Matrix-vector product with a rational matrix acting on a vector over T.
template <class T>
Vec<T> mat_vec(const QMat& a, const Vec<T>& v) {
  if (a.empty() || a[0].size() != v.size()) fail(ErrorCode::invalid_argument, "dimension mismatch in matrix product");
  const T zero = v[0] - v[0];
  Vec<T> out(a.size(), zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (sgn(a[i][j]) != 0) out[i] += v[j] * a[i][j];
    }
  }
  return out;
}

inline QVec mat_vec(const QMat& a, const QVec& v) {
  if (a.empty() || a[0].size() != v.size()) fail(ErrorCode::invalid_argument, "dimension mismatch in matrix product");
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

inline QMat matmul(const QMat& a, const QMat& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size()) fail(ErrorCode::invalid_argument, "dimension mismatch in matrix product");
  QMat c(a.size(), QVec(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) fail(ErrorCode::invalid_argument, "dimension mismatch in dot product");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero_vector(const QVec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

namespace detail {

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(QMat& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rat inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline std::size_t rank(QMat a) { return detail::rref(a).size(); }

/// Basis of {x : a x = 0}, each vector scaled to primitive integers.
inline std::vector<QVec> kernel_basis(QMat a, std::size_t cols) {
  std::vector<QVec> basis;
  if (a.empty()) {
    for (std::size_t j = 0; j < cols; ++j) {
      QVec e(cols);
      e[j] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  auto pivots = detail::rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(primitive_direction(v));
  }
  return basis;
}

inline QMat inverse(const QMat& a) {
  const std::size_t n = a.size();
  QMat aug(n, QVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) fail(ErrorCode::invalid_argument, "inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = detail::rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) fail(ErrorCode::singular_matrix, "matrix is not invertible");
  QMat inv(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

/// Unique solution of a x = b for invertible a.
inline QVec solve(const QMat& a, const QVec& b) { return mat_vec(inverse(a), b); }

inline std::string to_string(const QVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + "]";
}

inline std::string to_string(const QMat& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += to_string(m[i]);
  }
  return s + "]";
}

}  // namespace shintani
