#pragma once

// Sign cells of a central hyperplane arrangement in Q^n, with exact
// feasibility by Fourier-Motzkin elimination. Intended for n <= 3, where the
// elimination stays tiny.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "shintani/errors.hpp"
#include "shintani/ordered_field/linalg.hpp"

namespace shintani {

/// Primitive integer form with first nonzero entry positive; zero stays zero.
inline QVec normalize_form(const QVec& f) {
  QVec p = primitive_direction(f);
  for (const auto& x : p) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : p) y = -y;
    break;
  }
  return p;
}

/// Normalised, deduplicated, nonzero forms in first-seen order.
inline std::vector<QVec> distinct_forms(const std::vector<QVec>& forms) {
  std::vector<QVec> out;
  std::set<QVec> seen;
  for (const auto& f : forms) {
    if (is_zero_vector(f)) continue;
    QVec g = normalize_form(f);
    if (seen.insert(g).second) out.push_back(g);
  }
  return out;
}

namespace detail {

inline void add_constraint(std::set<QVec>& set, QVec c) { set.insert(primitive_direction(c)); }

}  // namespace detail

/// A point w with eq_i . w = 0 and strict_j . w > 0 for all i, j, if one
/// exists. Returns the origin only when there are no strict constraints and
/// the equalities force w = 0.
inline std::optional<QVec> find_point(std::size_t n, const std::vector<QVec>& eq, const std::vector<QVec>& strict) {
  std::vector<QVec> kernel = kernel_basis(eq, n);
  const std::size_t m = kernel.size();
  // Strict constraints in the coordinates t of w = sum t_j kernel_j.
  std::vector<std::vector<QVec>> level(m + 1);
  {
    std::set<QVec> top;
    for (const auto& s : strict) {
      QVec c(m);
      for (std::size_t j = 0; j < m; ++j) c[j] = dot(s, kernel[j]);
      if (is_zero_vector(c)) return std::nullopt;  // 0 > 0
      detail::add_constraint(top, c);
    }
    level[m].assign(top.begin(), top.end());
  }
  // Eliminate the last variable of each level.
  for (std::size_t k = m; k >= 1; --k) {
    std::vector<const QVec*> pos, neg;
    std::set<QVec> next;
    for (const auto& c : level[k]) {
      int s = sgn(c[k - 1]);
      if (s > 0) {
        pos.push_back(&c);
      } else if (s < 0) {
        neg.push_back(&c);
      } else {
        QVec d(c.begin(), c.end() - 1);
        if (is_zero_vector(d)) return std::nullopt;
        detail::add_constraint(next, d);
      }
    }
    for (const QVec* p : pos) {
      for (const QVec* q : neg) {
        // (-q_last) p + p_last q cancels the last variable; both weights > 0.
        Rat wp = -(*q)[k - 1], wq = (*p)[k - 1];
        QVec d(k - 1);
        for (std::size_t j = 0; j + 1 < k; ++j) d[j] = wp * (*p)[j] + wq * (*q)[j];
        if (is_zero_vector(d)) return std::nullopt;
        detail::add_constraint(next, d);
      }
    }
    level[k - 1].assign(next.begin(), next.end());
  }
  if (!level[0].empty()) return std::nullopt;
  // Back-substitution, choosing each coordinate strictly between its bounds.
  QVec t;
  for (std::size_t k = 1; k <= m; ++k) {
    std::optional<Rat> lo, hi;
    for (const auto& c : level[k]) {
      const Rat& a = c[k - 1];
      if (sgn(a) == 0) continue;
      Rat rest = 0;
      for (std::size_t j = 0; j + 1 < k; ++j) rest += c[j] * t[j];
      Rat bound = -rest / a;
      if (sgn(a) > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    Rat v;
    if (lo && hi) {
      if (!(*lo < *hi)) fail(ErrorCode::internal, "elimination produced an empty interval");
      v = (*lo + *hi) / 2;
    } else if (lo) {
      v = Rat(floor_rat(*lo) + 1);
    } else if (hi) {
      v = Rat(ceil_rat(*hi) - 1);
    } else {
      v = k == 1 ? 1 : 0;
    }
    t.push_back(v);
  }
  QVec w(n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t r = 0; r < n; ++r) w[r] += t[j] * kernel[j][r];
  return w;
}

/// One relatively open cell: the set of w with sign(form_i . w) = signs[i].
struct Cell {
  std::vector<int> signs;
  std::size_t dim = 0;
  QVec witness;
};

/// All cells of the arrangement other than the origin.
class Arrangement {
 public:
  Arrangement(std::size_t n, std::vector<QVec> forms) : n_(n), forms_(distinct_forms(forms)) {
    if (n == 0) fail(ErrorCode::invalid_argument, "arrangement in dimension zero");
    for (const auto& f : forms_)
      if (f.size() != n) fail(ErrorCode::invalid_argument, "form has wrong dimension");
    std::vector<std::vector<int>> partial{{}};
    for (std::size_t k = 0; k < forms_.size(); ++k) {
      std::vector<std::vector<int>> next;
      for (const auto& p : partial) {
        for (int s : {1, 0, -1}) {
          std::vector<int> cand = p;
          cand.push_back(s);
          if (point_for(cand)) next.push_back(std::move(cand));
        }
      }
      partial = std::move(next);
    }
    for (auto& signs : partial) {
      if (std::all_of(signs.begin(), signs.end(), [](int s) { return s == 0; })) continue;
      auto w = point_for(signs);
      Cell c;
      c.signs = signs;
      c.witness = primitive_direction(*w);
      std::vector<QVec> eq;
      for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] == 0) eq.push_back(forms_[i]);
      c.dim = n_ - (eq.empty() ? 0 : rank(eq));
      cells_.push_back(std::move(c));
    }
  }

  std::size_t dim() const noexcept { return n_; }
  const std::vector<QVec>& forms() const noexcept { return forms_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  /// Sign vector of an arbitrary point.
  std::vector<int> signs_at(const QVec& w) const {
    std::vector<int> s;
    for (const auto& f : forms_) s.push_back(sgn(dot(f, w)));
    return s;
  }

  /// One-dimensional cells lying in the closure of `c`: its extreme rays
  /// when the cell is pointed.
  std::vector<QVec> rays_of(const Cell& c) const {
    std::vector<QVec> rays;
    for (const auto& r : cells_) {
      if (r.dim != 1) continue;
      bool in_closure = true;
      for (std::size_t i = 0; i < forms_.size() && in_closure; ++i)
        in_closure = r.signs[i] == 0 || r.signs[i] == c.signs[i];
      if (in_closure) rays.push_back(r.witness);
    }
    return rays;
  }

 private:
  std::optional<QVec> point_for(const std::vector<int>& signs) const {
    std::vector<QVec> eq, strict;
    for (std::size_t i = 0; i < signs.size(); ++i) {
      if (signs[i] == 0) {
        eq.push_back(forms_[i]);
      } else {
        QVec f = forms_[i];
        if (signs[i] < 0)
          for (auto& x : f) x = -x;
        strict.push_back(std::move(f));
      }
    }
    return find_point(n_, eq, strict);
  }

  std::size_t n_;
  std::vector<QVec> forms_;
  std::vector<Cell> cells_;
};

}  // namespace shintani
