#pragma once

// Pointwise evaluation of the cocycle sigma and of its coboundary tau.
//
// sigma(a_1, ..., a_n)(w) = c(a_1 b(eps_1), ..., a_n b(eps_n))(w) with moment
// vectors b(eps) = (1, eps, ..., eps^(n-1)); polynomial slot j holds eps_{j+1}.
// tau(a_0, ..., a_n) = d(a_0 b(eps_0), ..., a_n b(eps_n)); there slot j holds
// eps_j. Both only ever need signs of polynomials, never quotients.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "shintani/cocycle/dvalue.hpp"
#include "shintani/cone/lex_form.hpp"

namespace shintani {

/// b(eps) with eps in polynomial slot `slot` of `nvars` variables.
inline Vec<MPoly> moment_vector(std::size_t dim, std::size_t nvars, std::size_t slot) {
  Vec<MPoly> b;
  b.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Monomial m;
    m[slot] = static_cast<std::uint16_t>(j);
    b.push_back(MPoly::monomial(nvars, m, Rat(1)));
  }
  return b;
}

inline Vec<MPoly> constant_vector(const QVec& w, std::size_t nvars) {
  Vec<MPoly> out;
  out.reserve(w.size());
  for (const auto& x : w) out.push_back(MPoly::constant(nvars, x));
  return out;
}

/// Checks that every matrix is dim x dim and invertible.
inline void check_matrices(const std::vector<QMat>& alphas, std::size_t dim) {
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const auto& a = alphas[i];
    bool square = a.size() == dim;
    for (const auto& row : a) square = square && row.size() == dim;
    if (!square) fail(ErrorCode::invalid_argument, "matrix has wrong shape", "matrix " + std::to_string(i));
    if (determinant(a) == 0)
      fail(ErrorCode::singular_matrix, "matrix is not invertible", "matrix " + std::to_string(i) + " = " + to_string(a));
  }
}

/// The perturbed generators a_i b(eps), the i-th using polynomial slot i.
inline std::vector<Vec<MPoly>> perturbed_generators(const std::vector<QMat>& alphas, std::size_t dim) {
  const std::size_t nvars = alphas.size();
  std::vector<Vec<MPoly>> v;
  v.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) v.push_back(mat_vec(alphas[i], moment_vector(dim, nvars, i)));
  return v;
}

inline int sigma_eval(const std::vector<QMat>& alphas, const QVec& w) {
  const std::size_t n = alphas.size();
  if (n == 0 || n > max_vars) fail(ErrorCode::invalid_argument, "sigma takes between 1 and 8 matrices");
  if (w.size() != n) fail(ErrorCode::invalid_argument, "point has wrong dimension");
  if (is_zero_vector(w)) fail(ErrorCode::zero_vector, "sigma is not defined at the origin");
  check_matrices(alphas, n);
  return cvalue(perturbed_generators(alphas, n), constant_vector(w, n));
}

inline int tau_cocycle(const std::vector<QMat>& alphas) {
  if (alphas.size() < 2 || alphas.size() > max_vars) fail(ErrorCode::invalid_argument, "tau takes between 2 and 8 matrices");
  const std::size_t n = alphas.size() - 1;
  check_matrices(alphas, n);
  return dvalue(perturbed_generators(alphas, n));
}

/// sum_i (-1)^i sigma(a_0, ..., a_i omitted, ..., a_n)(w).
inline int sigma_alternating_sum(const std::vector<QMat>& alphas, const QVec& w) {
  int s = 0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    std::vector<QMat> rest;
    for (std::size_t j = 0; j < alphas.size(); ++j)
      if (j != i) rest.push_back(alphas[j]);
    int v = sigma_eval(rest, w);
    s += (i % 2 == 0) ? v : -v;
  }
  return s;
}

/// sigma(a_1, ..., a_n) prepared for repeated evaluation.
///
/// With M the matrix of perturbed generators, sigma(w) != 0 exactly when every
/// det M_i(w) (column i replaced by w) has the sign of det M. Expanding along
/// column i, det M_i(w) = sum_r eps^r phi_{i,r}(w) with rational linear forms
/// phi_{i,r}; its sign is that of the first nonzero phi_{i,r}(w) in eps order.
class SigmaForms {
 public:
  explicit SigmaForms(const std::vector<QMat>& alphas) : n_(alphas.size()) {
    if (n_ == 0 || n_ > max_vars) fail(ErrorCode::invalid_argument, "sigma takes between 1 and 8 matrices");
    check_matrices(alphas, n_);
    Matrix<MPoly> m = from_columns(perturbed_generators(alphas, n_));
    det_sign_ = sign(determinant(m));
    if (det_sign_ == 0) fail(ErrorCode::internal, "perturbed generators are dependent");
    for (std::size_t i = 0; i < n_; ++i) {
      std::map<Monomial, QVec> by_monomial;
      for (std::size_t k = 0; k < n_; ++k) {
        Matrix<MPoly> mk = m;
        for (std::size_t r = 0; r < n_; ++r) mk[r][i] = MPoly::constant(n_, Rat(r == k ? 1 : 0));
        MPoly cof = determinant(mk);
        for (const auto& [mono, c] : cof.terms()) {
          auto& f = by_monomial.try_emplace(mono, QVec(n_)).first->second;
          f[k] = c;
        }
      }
      std::vector<std::pair<Monomial, QVec>> terms(by_monomial.begin(), by_monomial.end());
      std::sort(terms.begin(), terms.end(),
                [&](const auto& a, const auto& b) { return eps_less(a.first, b.first, n_); });
      LexLinearForm lex;
      for (auto& t : terms) lex.forms.push_back(primitive_direction(t.second));
      coords_.push_back(lex.reduced());
    }
  }

  std::size_t dim() const noexcept { return n_; }
  int det_sign() const noexcept { return det_sign_; }
  const std::vector<LexLinearForm>& coordinate_forms() const noexcept { return coords_; }

  int operator()(const QVec& w) const {
    if (w.size() != n_) fail(ErrorCode::invalid_argument, "point has wrong dimension");
    if (is_zero_vector(w)) fail(ErrorCode::zero_vector, "sigma is not defined at the origin");
    for (const auto& f : coords_)
      if (f.sign_at(w) != det_sign_) return 0;
    return det_sign_;
  }

 private:
  std::size_t n_;
  int det_sign_ = 0;
  std::vector<LexLinearForm> coords_;
};

}  // namespace shintani
