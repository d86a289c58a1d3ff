#pragma once

// Rational functions in infinitesimals eps_0 < ... with the order in which
// eps_{i+1} is smaller than every positive power of eps_i. Variable slot k of
// an element with V variables stands for the k-th infinitesimal in the
// caller's chosen list; the list is nested in increasing slot order.

#include <string>

#include "shintani/errors.hpp"
#include "shintani/ordered_field/eps_order.hpp"

namespace shintani {

class OrderedElem {
 public:
  explicit OrderedElem(std::size_t nvars = 0) : num_(nvars), den_(MPoly::constant(nvars, Rat(1))) {}

  OrderedElem(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorCode::division_by_zero, "zero denominator");
    if (num_.nvars() != den_.nvars()) fail(ErrorCode::invalid_argument, "numerator and denominator disagree on variables");
    normalize();
  }

  explicit OrderedElem(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.nvars(), Rat(1))) {
    normalize();
  }

  static OrderedElem constant(std::size_t nvars, const Rat& c) {
    return OrderedElem(MPoly::constant(nvars, c));
  }
  static OrderedElem variable(std::size_t nvars, std::size_t slot) {
    return OrderedElem(MPoly::variable(nvars, slot));
  }

  std::size_t nvars() const noexcept { return num_.nvars(); }
  const MPoly& num() const noexcept { return num_; }
  const MPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  int sign() const { return eps_sign(num_) * eps_sign(den_); }

  OrderedElem operator-() const { return OrderedElem(-num_, den_); }

  friend OrderedElem operator+(const OrderedElem& a, const OrderedElem& b) {
    if (a.den_ == b.den_) return OrderedElem(a.num_ + b.num_, a.den_);
    return OrderedElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend OrderedElem operator-(const OrderedElem& a, const OrderedElem& b) { return a + (-b); }
  friend OrderedElem operator*(const OrderedElem& a, const OrderedElem& b) {
    return OrderedElem(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend OrderedElem operator/(const OrderedElem& a, const OrderedElem& b) {
    if (b.is_zero()) fail(ErrorCode::division_by_zero, "division by zero in ordered field");
    return OrderedElem(a.num_ * b.den_, a.den_ * b.num_);
  }
  OrderedElem& operator+=(const OrderedElem& o) { return *this = *this + o; }
  OrderedElem& operator-=(const OrderedElem& o) { return *this = *this - o; }
  OrderedElem& operator*=(const OrderedElem& o) { return *this = *this * o; }

  /// Value-level equality, independent of the representing fraction.
  friend bool operator==(const OrderedElem& a, const OrderedElem& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const {
    return "(" + shintani::to_string(num_) + ")/(" + shintani::to_string(den_) + ")";
  }

 private:
  // Clears rational content and common monomial factors, and makes the
  // denominator's leading coefficient positive. The value is unchanged.
  void normalize() {
    const std::size_t nv = num_.nvars();
    Monomial common = den_.terms().begin()->first;
    auto meet = [&](const MPoly& p) {
      for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < nv; ++i) common[i] = std::min(common[i], m[i]);
    };
    meet(den_);
    meet(num_);
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : den_.terms()) {
      den_lcm = lcm(den_lcm, c.get_den());
      num_gcd = gcd(num_gcd, c.get_num());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (eps_sign(den_) < 0) scale = -scale;
    auto rebuild = [&](const MPoly& p) {
      MPoly r(nv);
      for (const auto& [m, c] : p.terms()) {
        Monomial q = m;
        for (std::size_t i = 0; i < nv; ++i) q[i] = static_cast<std::uint16_t>(q[i] - common[i]);
        r.add_term(q, c * scale);
      }
      return r;
    };
    if (num_.is_zero()) {
      den_ = MPoly::constant(nv, Rat(1));
      return;
    }
    num_ = rebuild(num_);
    den_ = rebuild(den_);
  }

  MPoly num_;
  MPoly den_;
};

inline OrderedElem operator*(const OrderedElem& x, const Rat& s) {
  return OrderedElem(x.num().scaled(s), x.den());
}

inline int sign(const OrderedElem& x) { return x.sign(); }
inline bool is_zero(const OrderedElem& x) { return x.is_zero(); }
inline int sign(const MPoly& p) { return eps_sign(p); }

/// sign(a - b).
inline int compare(const OrderedElem& a, const OrderedElem& b) { return (a - b).sign(); }

/// Embedding of the field in eps_1..eps_n (slots 0..n-1) into the field in
/// eps_0..eps_n (slots 0..n) that skips eps_i: source slot j goes to the j-th
/// entry of (eps_0, ..., eps_i omitted, ..., eps_n).
inline MPoly iota(std::size_t i, const MPoly& p) {
  const std::size_t n = p.nvars();
  if (i > n) fail(ErrorCode::invalid_argument, "embedding index out of range", std::to_string(i));
  std::vector<std::size_t> target(n);
  for (std::size_t j = 0; j < n; ++j) target[j] = j < i ? j : j + 1;
  return rename_vars(p, target, n + 1);
}

inline OrderedElem iota(std::size_t i, const OrderedElem& x) {
  return OrderedElem(iota(i, x.num()), iota(i, x.den()));
}

}  // namespace shintani
