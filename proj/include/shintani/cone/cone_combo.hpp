#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "shintani/errors.hpp"
#include "shintani/ordered_field/linalg.hpp"

namespace shintani {

/// Relatively open cone {sum x_i g_i : x_i > 0} on linearly independent
/// rational generators. Generators are stored as primitive integer vectors,
/// which leaves the cone unchanged.
class OpenSimplicialCone {
 public:
  OpenSimplicialCone(std::vector<QVec> generators) {  // NOLINT(google-explicit-constructor)
    if (generators.empty()) fail(ErrorCode::invalid_argument, "a cone needs at least one generator");
    const std::size_t n = generators[0].size();
    if (n == 0) fail(ErrorCode::invalid_argument, "generators must be nonempty vectors");
    for (auto& g : generators) {
      if (g.size() != n) fail(ErrorCode::invalid_argument, "generators of unequal dimension");
      if (is_zero_vector(g)) fail(ErrorCode::zero_vector, "zero generator");
      g = primitive_direction(g);
    }
    gens_ = std::move(generators);
    // Rows of the n x r generator matrix; a full-rank r x r subsystem gives
    // the coordinates of any point of the span.
    QMat g(n, QVec(gens_.size()));
    for (std::size_t c = 0; c < gens_.size(); ++c)
      for (std::size_t r = 0; r < n; ++r) g[r][c] = gens_[c][r];
    QMat chosen;
    for (std::size_t r = 0; r < n && chosen.size() < gens_.size(); ++r) {
      QMat trial = chosen;
      trial.push_back(g[r]);
      if (rank(trial) == trial.size()) {
        chosen = std::move(trial);
        rows_.push_back(r);
      }
    }
    if (chosen.size() != gens_.size())
      fail(ErrorCode::invalid_argument, "cone generators are linearly dependent", describe());
    sub_inverse_ = inverse(chosen);
  }

  std::size_t ambient_dim() const noexcept { return gens_[0].size(); }
  std::size_t dim() const noexcept { return gens_.size(); }
  const std::vector<QVec>& generators() const noexcept { return gens_; }

  /// Coordinates of w in the generator basis, or nothing when w is outside
  /// the span.
  bool coordinates(const QVec& w, QVec& x) const {
    if (w.size() != ambient_dim()) fail(ErrorCode::invalid_argument, "point has wrong dimension");
    QVec sub;
    for (auto r : rows_) sub.push_back(w[r]);
    x = mat_vec(sub_inverse_, sub);
    for (std::size_t r = 0; r < ambient_dim(); ++r) {
      Rat s = 0;
      for (std::size_t c = 0; c < gens_.size(); ++c) s += x[c] * gens_[c][r];
      if (s != w[r]) return false;
    }
    return true;
  }

  bool contains(const QVec& w) const {
    QVec x;
    if (!coordinates(w, x)) return false;
    return std::all_of(x.begin(), x.end(), [](const Rat& v) { return sgn(v) > 0; });
  }

  std::string describe() const {
    std::string s = "C(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ",";
      s += to_string(gens_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const OpenSimplicialCone& a, const OpenSimplicialCone& b) { return a.gens_ == b.gens_; }

 private:
  std::vector<QVec> gens_;
  std::vector<std::size_t> rows_;
  QMat sub_inverse_;
};

/// Finite rational combination of open cone indicators plus a constant.
struct ConeCombo {
  struct Term {
    Rat coeff;
    OpenSimplicialCone cone;
  };

  std::size_t n = 0;
  Rat constant = 0;
  std::vector<Term> terms;

  explicit ConeCombo(std::size_t dim = 0) : n(dim) {}

  void add(const Rat& coeff, OpenSimplicialCone cone) {
    if (cone.ambient_dim() != n) fail(ErrorCode::invalid_argument, "cone dimension does not match combination");
    if (sgn(coeff) != 0) terms.push_back({coeff, std::move(cone)});
  }

  ConeCombo& operator+=(const ConeCombo& o) {
    if (o.n != n) fail(ErrorCode::invalid_argument, "combinations of different dimensions");
    constant += o.constant;
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
  }

  ConeCombo scaled(const Rat& s) const {
    ConeCombo r(n);
    r.constant = constant * s;
    for (const auto& t : terms) r.add(t.coeff * s, t.cone);
    return r;
  }
};

inline Rat combo_eval(const ConeCombo& c, const QVec& w) {
  if (w.size() != c.n) fail(ErrorCode::invalid_argument, "point has wrong dimension");
  if (is_zero_vector(w)) fail(ErrorCode::zero_vector, "cone functions are not evaluated at the origin");
  Rat v = c.constant;
  for (const auto& t : c.terms)
    if (t.cone.contains(w)) v += t.coeff;
  return v;
}

/// (a * c)(w) = sign(det a) c(a^-1 w): generators move by a and every
/// coefficient, the constant included, picks up sign(det a).
inline ConeCombo act(const QMat& a, const ConeCombo& c) {
  if (a.size() != c.n) fail(ErrorCode::invalid_argument, "matrix does not match combination dimension");
  Rat d = determinant(a);
  if (d == 0) fail(ErrorCode::singular_matrix, "acting matrix is not invertible", to_string(a));
  const Rat s = sgn(d);
  ConeCombo r(c.n);
  r.constant = c.constant * s;
  for (const auto& t : c.terms) {
    std::vector<QVec> g;
    for (const auto& v : t.cone.generators()) g.push_back(mat_vec(a, v));
    r.add(t.coeff * s, OpenSimplicialCone(std::move(g)));
  }
  return r;
}

}  // namespace shintani
