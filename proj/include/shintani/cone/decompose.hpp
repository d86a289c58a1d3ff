#pragma once

// Explicit cone combinations for sigma(a_1, ..., a_n) and for regions cut out
// by lexicographic lists of linear forms.
//
// Both functions are constant on the sign cells of a finite central
// arrangement. The coordinate hyperplanes are always included, which makes
// every cell a pointed cone; each cell is then written as a disjoint union of
// relatively open simplicial cones on its extreme rays.

#include <functional>

#include "shintani/cocycle/sigma.hpp"
#include "shintani/cone/arrangement.hpp"
#include "shintani/cone/cone_combo.hpp"

namespace shintani {

/// Disjoint open simplicial cones whose union is the open cell `c`.
inline std::vector<OpenSimplicialCone> triangulate_cell(const Arrangement& arr, const Cell& c) {
  std::vector<QVec> rays = arr.rays_of(c);
  switch (c.dim) {
    case 1:
      return {OpenSimplicialCone({c.witness})};
    case 2:
      if (rays.size() != 2) fail(ErrorCode::internal, "planar cell without exactly two extreme rays");
      return {OpenSimplicialCone(rays)};
    case 3: {
      if (rays.size() < 3) fail(ErrorCode::internal, "solid cell with fewer than three extreme rays");
      const QVec r0 = rays[0];
      std::vector<QVec> rest(rays.begin() + 1, rays.end());
      auto det3 = [](const QVec& a, const QVec& b, const QVec& d) {
        return determinant(QMat{{a[0], b[0], d[0]}, {a[1], b[1], d[1]}, {a[2], b[2], d[2]}});
      };
      // Seen from the extreme ray r0 the other rays sweep an angle below pi,
      // so det(r0, a, b) > 0 is a strict order.
      std::sort(rest.begin(), rest.end(), [&](const QVec& a, const QVec& b) { return sgn(det3(r0, a, b)) > 0; });
      std::vector<OpenSimplicialCone> out;
      for (std::size_t j = 0; j + 1 < rest.size(); ++j) out.emplace_back(std::vector<QVec>{r0, rest[j], rest[j + 1]});
      for (std::size_t j = 1; j + 1 < rest.size(); ++j) out.emplace_back(std::vector<QVec>{r0, rest[j]});
      return out;
    }
    default:
      fail(ErrorCode::unsupported_dimension, "cells above dimension three are not triangulated");
  }
}

/// Cone combination of the function taking value `value(witness)` on each
/// cell of the arrangement of `forms` (coordinate forms added).
inline ConeCombo decompose_by_arrangement(std::size_t n, std::vector<QVec> forms,
                                          const std::function<Rat(const QVec&)>& value) {
  if (n == 0 || n > 3) fail(ErrorCode::unsupported_dimension, "decomposition is implemented for n <= 3", std::to_string(n));
  for (std::size_t k = 0; k < n; ++k) {
    QVec e(n);
    e[k] = 1;
    forms.push_back(e);
  }
  Arrangement arr(n, forms);
  ConeCombo combo(n);
  for (const auto& c : arr.cells()) {
    Rat v = value(c.witness);
    if (sgn(v) == 0) continue;
    for (auto& cone : triangulate_cell(arr, c)) combo.add(v, std::move(cone));
  }
  return combo;
}

/// Every linear form that can decide the value of sigma(alphas).
inline std::vector<QVec> sigma_forms(const SigmaForms& s) {
  std::vector<QVec> out;
  for (const auto& lex : s.coordinate_forms())
    for (const auto& f : lex.forms) out.push_back(f);
  return out;
}

inline ConeCombo sigma_decompose(const std::vector<QMat>& alphas) {
  const std::size_t n = alphas.size();
  if (n == 0) fail(ErrorCode::invalid_argument, "sigma takes at least one matrix");
  if (n > 3) fail(ErrorCode::unsupported_dimension, "decomposition is implemented for n <= 3", std::to_string(n));
  SigmaForms s(alphas);
  return decompose_by_arrangement(n, sigma_forms(s), [&](const QVec& w) { return Rat(s(w)); });
}

/// Indicator of {w : the first phi_k with phi_k(w) != 0 has phi_k(w) > 0}.
inline ConeCombo lex_positive_region(const LexLinearForm& f, std::size_t n) {
  if (f.forms.empty() || f.all_zero()) fail(ErrorCode::all_forms_zero, "every form in the list is zero");
  for (const auto& g : f.forms)
    if (g.size() != n) fail(ErrorCode::invalid_argument, "form has wrong dimension");
  LexLinearForm r = f.reduced();
  return decompose_by_arrangement(n, r.forms, [&](const QVec& w) { return Rat(r.sign_at(w) > 0 ? 1 : 0); });
}

}  // namespace shintani
