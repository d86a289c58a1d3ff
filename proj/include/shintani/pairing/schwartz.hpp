#pragma once

// Locally constant, compactly supported test functions on finite adeles,
// in the normalised shape "supported on (1/d)Z^n, invariant under f Z^n",
// and finitely supported functions on Q^n.

#include <functional>
#include <map>
#include <vector>

#include "shintani/pairing/quot_series.hpp"

namespace shintani {

/// Residue class of a point of (1/d)Z^n modulo f Z^n, recorded as the
/// integer vector d*w reduced into [0, d*f).
using ResidueClass = std::vector<long>;

class SchwartzFn {
 public:
  SchwartzFn(std::size_t n, long d, long f) : n_(n), d_(d), f_(f) {
    if (n == 0) fail(ErrorCode::invalid_argument, "test function in dimension zero");
    if (d < 1 || f < 1) fail(ErrorCode::invalid_argument, "support denominator and period must be positive");
  }

  /// Characteristic function of Zhat^n.
  static SchwartzFn indicator(std::size_t n) {
    SchwartzFn s(n, 1, 1);
    s.set(ResidueClass(n, 0), CoeffElem(1));
    return s;
  }

  /// Table filled by evaluating `fn` on every residue class.
  static SchwartzFn tabulate(std::size_t n, long d, long f, const std::function<CoeffElem(const ResidueClass&)>& fn) {
    SchwartzFn s(n, d, f);
    ResidueClass c(n, 0);
    const long m = d * f;
    while (true) {
      s.set(c, fn(c));
      std::size_t i = 0;
      while (i < n && ++c[i] == m) c[i++] = 0;
      if (i == n) break;
    }
    return s;
  }

  std::size_t dim() const noexcept { return n_; }
  long support_denominator() const noexcept { return d_; }
  long period() const noexcept { return f_; }
  const std::map<ResidueClass, CoeffElem>& table() const noexcept { return table_; }

  ResidueClass reduce(ResidueClass c) const {
    const long m = d_ * f_;
    for (auto& x : c) x = ((x % m) + m) % m;
    return c;
  }

  void set(const ResidueClass& c, const CoeffElem& v) {
    if (c.size() != n_) fail(ErrorCode::invalid_argument, "residue class has wrong dimension");
    ResidueClass r = reduce(c);
    if (v.is_zero()) {
      table_.erase(r);
    } else {
      table_[r] = v;
    }
  }

  /// Class of w, or nothing when w is off the support lattice.
  std::optional<ResidueClass> class_of(const QVec& w) const {
    if (w.size() != n_) fail(ErrorCode::invalid_argument, "point has wrong dimension");
    const long m = d_ * f_;
    ResidueClass c(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Rat x = w[i] * d_;
      if (!is_integer(x)) return std::nullopt;
      Int r = x.get_num() % m;
      if (r < 0) r += m;
      c[i] = r.get_si();
    }
    return c;
  }

  CoeffElem value_of_class(const ResidueClass& c) const {
    auto it = table_.find(c);
    return it == table_.end() ? CoeffElem(0) : it->second;
  }

  CoeffElem operator()(const QVec& w) const {
    auto c = class_of(w);
    return c ? value_of_class(*c) : CoeffElem(0);
  }

  /// Vanishes on the neighbourhood f Zhat^n of the origin.
  bool vanishes_near_zero() const { return value_of_class(ResidueClass(n_, 0)).is_zero(); }

  friend SchwartzFn operator+(const SchwartzFn& a, const SchwartzFn& b) {
    if (a.n_ != b.n_) fail(ErrorCode::invalid_argument, "test functions of different dimensions");
    long d = std::lcm(a.d_, b.d_), f = std::lcm(a.f_, b.f_);
    // Residues of the common lattice pulled back to each summand.
    return tabulate(a.n_, d, f, [&](const ResidueClass& c) {
      QVec w;
      for (long x : c) w.push_back(make_rat(x, d));
      return a(w) + b(w);
    });
  }

  SchwartzFn scaled(const CoeffElem& s) const {
    SchwartzFn r(n_, d_, f_);
    for (const auto& [c, v] : table_) r.set(c, v * s);
    return r;
  }

 private:
  std::size_t n_;
  long d_, f_;
  std::map<ResidueClass, CoeffElem> table_;
};

/// Finitely supported function Q^n -> CoeffRing.
using FiniteSupportFn = std::map<QVec, CoeffElem>;

/// ([v] A)(w) = A(w - v).
inline FiniteSupportFn translate(const FiniteSupportFn& a, const QVec& v) {
  FiniteSupportFn r;
  for (const auto& [w, c] : a) {
    QVec x = w;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += v[i];
    r[x] += c;
  }
  return r;
}

/// sum_w A(w) exp(w.z) through total degree `dmax`.
inline QuotSeries phi_map(const FiniteSupportFn& a, std::size_t n, int dmax) {
  Series s(n);
  for (const auto& [w, c] : a) {
    if (w.size() != n) fail(ErrorCode::invalid_argument, "support point has wrong dimension");
    if (!c.is_zero()) s += exp_series(to_form(w), dmax).scaled(c);
  }
  return QuotSeries::power_series(std::move(s), dmax);
}

}  // namespace shintani
