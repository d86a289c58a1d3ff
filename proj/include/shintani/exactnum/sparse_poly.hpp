#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "shintani/errors.hpp"
#include "shintani/exactnum/monomial.hpp"
#include "shintani/exactnum/rat.hpp"

namespace shintani {

namespace detail {
// Unqualified so that overloads for coefficient types declared later are
// found by argument-dependent lookup.
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}
}  // namespace detail

/// Sparse multivariate polynomial with coefficients in a commutative ring `C`.
/// Zero coefficients are never stored. `C` must provide the usual arithmetic
/// operators and a free function `is_zero(const C&)`.
template <class C>
class SparsePoly {
 public:
  using coeff_type = C;
  using term_map = std::map<Monomial, C>;

  explicit SparsePoly(std::size_t nvars = 0) : nvars_(nvars) {
    if (nvars > max_vars) fail(ErrorCode::invalid_argument, "too many variables: " + std::to_string(nvars));
  }

  static SparsePoly constant(std::size_t nvars, const C& c) {
    SparsePoly p(nvars);
    p.add_term(Monomial{}, c);
    return p;
  }

  static SparsePoly variable(std::size_t nvars, std::size_t var) {
    if (var >= nvars) fail(ErrorCode::invalid_argument, "variable index out of range");
    SparsePoly p(nvars);
    p.add_term(Monomial::unit(var), C(1));
    return p;
  }

  static SparsePoly monomial(std::size_t nvars, const Monomial& m, const C& c) {
    SparsePoly p(nvars);
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  C coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Maximum total degree of a stored term; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.total_degree()));
    return d;
  }

  /// Minimum total degree of a stored term; -1 for the zero polynomial.
  int low_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int t = static_cast<int>(m.total_degree());
      if (d < 0 || t < d) d = t;
    }
    return d;
  }

  void add_term(const Monomial& m, const C& c) {
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  SparsePoly& operator-=(const SparsePoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  SparsePoly operator-() const {
    SparsePoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_compatible(b);
    SparsePoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly scaled(const C& s) const {
    SparsePoly r(nvars_);
    if (detail::coeff_is_zero(s)) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }

  /// Exact division by a nonzero scalar.
  SparsePoly div_scalar(const C& s) const {
    if (detail::coeff_is_zero(s)) fail(ErrorCode::division_by_zero, "polynomial divided by zero scalar");
    SparsePoly r(nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, c / s);
    return r;
  }

  SparsePoly mul_monomial(const Monomial& mono) const {
    SparsePoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m * mono, c);
    return r;
  }

  /// Terms of total degree at most `deg`.
  SparsePoly truncated(int deg) const {
    SparsePoly r(nvars_);
    for (const auto& [m, c] : terms_)
      if (static_cast<int>(m.total_degree()) <= deg) r.terms_.emplace(m, c);
    return r;
  }

  /// Terms of total degree exactly `deg`.
  SparsePoly homogeneous_part(int deg) const {
    SparsePoly r(nvars_);
    for (const auto& [m, c] : terms_)
      if (static_cast<int>(m.total_degree()) == deg) r.terms_.emplace(m, c);
    return r;
  }

  /// Product truncated at total degree `deg`; skips work on discarded terms.
  static SparsePoly mul_truncated(const SparsePoly& a, const SparsePoly& b, int deg) {
    a.check_compatible(b);
    SparsePoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      int da = static_cast<int>(ma.total_degree());
      if (da > deg) continue;
      for (const auto& [mb, cb] : b.terms_) {
        if (da + static_cast<int>(mb.total_degree()) > deg) continue;
        r.add_term(ma * mb, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const SparsePoly& o) const {
    if (o.nvars_ != nvars_)
      fail(ErrorCode::invalid_argument,
           "variable count mismatch: " + std::to_string(nvars_) + " vs " + std::to_string(o.nvars_));
  }

  std::size_t nvars_;
  term_map terms_;
};

template <class C>
SparsePoly<C> operator*(const SparsePoly<C>& p, const C& s) {
  return p.scaled(s);
}

/// Sparse multivariate polynomial over the rationals.
using MPoly = SparsePoly<Rat>;

inline std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (m[i] == 0) continue;
      s += "*x" + std::to_string(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
  }
  return s;
}

}  // namespace shintani
