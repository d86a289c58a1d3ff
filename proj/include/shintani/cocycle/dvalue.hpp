#pragma once

// The sign functions d and c over any ordered ring whose elements have a
// free `sign` (rationals, polynomials in infinitesimals, OrderedElem).

#include <string>
#include <vector>

#include "shintani/errors.hpp"
#include "shintani/ordered_field/linalg.hpp"
#include "shintani/ordered_field/ordered_elem.hpp"

namespace shintani {

/// Sign of the determinant of the columns v_0..v_n with v_skip left out.
template <class T>
int omitted_det_sign(const std::vector<Vec<T>>& v, std::size_t skip) {
  std::vector<Vec<T>> cols;
  cols.reserve(v.size() - 1);
  for (std::size_t j = 0; j < v.size(); ++j)
    if (j != skip) cols.push_back(v[j]);
  return sign(determinant(from_columns(cols)));
}

/// d(v_0, ..., v_n) for n+1 vectors in dimension n.
///
/// The kernel vector of (v_0 | ... | v_n) is lambda_i = (-1)^i det(v without
/// v_i). All of these determinants are computed, so the general-position
/// requirement is checked at no extra cost: every n-subset is one of them,
/// and smaller subsets inherit independence.
template <class T>
int dvalue(const std::vector<Vec<T>>& v) {
  const std::size_t n = v.size() ? v.size() - 1 : 0;
  if (n == 0) fail(ErrorCode::invalid_argument, "d needs at least two vectors");
  for (const auto& x : v)
    if (x.size() != n) fail(ErrorCode::invalid_argument, "d needs n+1 vectors of dimension n");
  int common = 0;
  bool agree = true;
  for (std::size_t i = 0; i <= n; ++i) {
    int s = omitted_det_sign(v, i);
    if (s == 0)
      fail(ErrorCode::general_position_violation, "vectors are not in general position",
           "subset omitting index " + std::to_string(i) + " is dependent");
    int lambda = (i % 2 == 0) ? s : -s;
    if (i == 0) {
      common = lambda;
    } else if (lambda != common) {
      agree = false;
    }
  }
  return agree ? common : 0;
}

/// c(v_1, ..., v_n)(w): sign det V when w lies in the open cone on the v_i.
/// Coordinates of w are signed by Cramer's rule, never by division.
template <class T>
int cvalue(const std::vector<Vec<T>>& v, const Vec<T>& w) {
  const std::size_t n = v.size();
  if (n == 0 || w.size() != n) fail(ErrorCode::invalid_argument, "c needs n vectors of dimension n and a point");
  for (const auto& x : v)
    if (x.size() != n) fail(ErrorCode::invalid_argument, "c needs n vectors of dimension n");
  Matrix<T> m = from_columns(v);
  int det_sign = sign(determinant(m));
  if (det_sign == 0) fail(ErrorCode::singular_basis, "vectors are linearly dependent");
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<T> mi = m;
    for (std::size_t r = 0; r < n; ++r) mi[r][i] = w[r];
    if (sign(determinant(mi)) != det_sign) return 0;
  }
  return det_sign;
}

}  // namespace shintani
