#pragma once

// The coefficient ring Q[g1, g2] / (Phi_m(g1), g2^2 - D). With g1 a primitive
// m-th root of unity and g2 = sqrt(D) this is Q(zeta_m, sqrt(D)) whenever
// sqrt(D) does not already lie in Q(zeta_m); otherwise it is a product of
// fields and a few elements are zero divisors (inverse() reports them).

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "shintani/errors.hpp"
#include "shintani/exactnum/rat.hpp"

namespace shintani {

namespace detail {

using RatPoly = std::vector<Rat>;  // coefficient of x^i at index i

inline void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

/// Quotient of a by the monic polynomial b; a must be divisible.
inline RatPoly poly_exact_div_monic(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) {
    if (!a.empty()) fail(ErrorCode::internal, "cyclotomic division left a remainder");
    return {};
  }
  RatPoly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Rat c = a[k + b.size() - 1];
    q[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) fail(ErrorCode::internal, "cyclotomic division left a remainder");
  return q;
}

/// Reduces p modulo the monic polynomial m in place.
inline void poly_reduce(RatPoly& p, const RatPoly& m) {
  const std::size_t deg = m.size() - 1;
  for (std::size_t k = p.size(); k-- > deg;) {
    Rat c = p[k];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) p[k - deg + j] -= c * m[j];
  }
  p.resize(deg);
}

}  // namespace detail

/// Cyclotomic polynomial Phi_m, by dividing x^m - 1 by Phi_d for every proper
/// divisor d of m.
inline std::vector<Rat> cyclotomic_polynomial(int m) {
  if (m < 1) fail(ErrorCode::invalid_argument, "cyclotomic order must be positive");
  detail::RatPoly p(static_cast<std::size_t>(m) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = detail::poly_exact_div_monic(p, cyclotomic_polynomial(d));
  }
  return p;
}

inline bool is_square_free(long n) {
  if (n < 1) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

/// Descriptor of Q(zeta_m, sqrt(D)). `sqrt_d == 1` means no square root is
/// adjoined. Instances are interned, so rings compare by pointer.
class CoeffRing {
 public:
  static std::shared_ptr<const CoeffRing> get(int m, long sqrt_d = 1) {
    if (m < 1 || m > 1000) fail(ErrorCode::invalid_argument, "unsupported cyclotomic order " + std::to_string(m));
    if (sqrt_d < 1 || (sqrt_d > 1 && !is_square_free(sqrt_d)))
      fail(ErrorCode::not_square_free, "square-root generator must be square-free and > 1",
           std::to_string(sqrt_d));
    static std::mutex mutex;
    static std::map<std::pair<int, long>, std::shared_ptr<const CoeffRing>> registry;
    std::lock_guard lock(mutex);
    auto& slot = registry[{m, sqrt_d}];
    if (!slot) slot = std::shared_ptr<const CoeffRing>(new CoeffRing(m, sqrt_d));
    return slot;
  }

  static std::shared_ptr<const CoeffRing> rationals() { return get(1, 1); }

  int cyclotomic_order() const noexcept { return m_; }
  long sqrt_d() const noexcept { return d_; }
  bool has_sqrt() const noexcept { return d_ > 1; }
  std::size_t phi() const noexcept { return cyclo_.size() - 1; }
  std::size_t dim() const noexcept { return phi() * (has_sqrt() ? 2 : 1); }
  const std::vector<Rat>& cyclotomic() const noexcept { return cyclo_; }
  bool is_rationals() const noexcept { return dim() == 1; }

  std::string describe() const {
    std::string s = "Q";
    if (m_ > 2) s += "(zeta_" + std::to_string(m_) + ")";
    if (has_sqrt()) s += "(sqrt " + std::to_string(d_) + ")";
    return s;
  }

 private:
  CoeffRing(int m, long d) : m_(m), d_(d), cyclo_(cyclotomic_polynomial(m)) {}

  int m_;
  long d_;
  std::vector<Rat> cyclo_;
};

using RingPtr = std::shared_ptr<const CoeffRing>;

/// Smallest interned ring containing both arguments.
inline RingPtr common_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return a;
  if (a->is_rationals()) return b;
  if (b->is_rationals()) return a;
  long d = a->sqrt_d();
  if (b->has_sqrt()) {
    if (a->has_sqrt() && a->sqrt_d() != b->sqrt_d())
      fail(ErrorCode::ring_mismatch, "cannot combine " + a->describe() + " and " + b->describe());
    d = b->sqrt_d();
  }
  int m = std::lcm(a->cyclotomic_order(), b->cyclotomic_order());
  return CoeffRing::get(m, d);
}

/// Element of a CoeffRing, stored fully reduced as a coordinate vector over
/// the basis g1^i g2^j (index j * phi + i). A default-constructed element is
/// the rational zero.
class CoeffElem {
 public:
  CoeffElem() : ring_(CoeffRing::rationals()), c_(1) {}
  CoeffElem(long v) : CoeffElem(Rat(v)) {}  // NOLINT(google-explicit-constructor)
  CoeffElem(int v) : CoeffElem(Rat(v)) {}   // NOLINT(google-explicit-constructor)
  CoeffElem(const Rat& v) : ring_(CoeffRing::rationals()), c_{v} {}  // NOLINT(google-explicit-constructor)

  CoeffElem(RingPtr ring, std::vector<Rat> coords) : ring_(std::move(ring)), c_(std::move(coords)) {
    if (c_.size() != ring_->dim()) fail(ErrorCode::invalid_argument, "coordinate vector has wrong length");
  }

  static CoeffElem from_rat(const RingPtr& ring, const Rat& v) {
    std::vector<Rat> c(ring->dim());
    c[0] = v;
    return CoeffElem(ring, std::move(c));
  }

  /// zeta_m^k for the cyclotomic generator of `ring`.
  static CoeffElem root_of_unity(const RingPtr& ring, long k) {
    const long m = ring->cyclotomic_order();
    k %= m;
    if (k < 0) k += m;
    detail::RatPoly p(static_cast<std::size_t>(k) + 1);
    p[static_cast<std::size_t>(k)] = 1;
    return from_poly_pair(ring, std::move(p), {});
  }

  /// sqrt(D) in `ring`.
  static CoeffElem sqrt_generator(const RingPtr& ring) {
    if (!ring->has_sqrt()) fail(ErrorCode::invalid_argument, "ring has no square-root generator");
    std::vector<Rat> c(ring->dim());
    c[ring->phi()] = 1;
    return CoeffElem(ring, std::move(c));
  }

  /// Builds a + b*sqrt(D) from polynomials in g1, reducing modulo Phi_m.
  static CoeffElem from_poly_pair(const RingPtr& ring, detail::RatPoly a, detail::RatPoly b) {
    const std::size_t phi = ring->phi();
    detail::poly_reduce(a, ring->cyclotomic());
    detail::poly_reduce(b, ring->cyclotomic());
    std::vector<Rat> c(ring->dim());
    for (std::size_t i = 0; i < phi; ++i) c[i] = a[i];
    if (ring->has_sqrt()) {
      for (std::size_t i = 0; i < phi; ++i) c[phi + i] = b[i];
    } else {
      for (const auto& x : b)
        if (sgn(x) != 0) fail(ErrorCode::invalid_argument, "sqrt component in ring without square root");
    }
    return CoeffElem(ring, std::move(c));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Rat>& coords() const noexcept { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (sgn(x) != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }

  Rat to_rat() const {
    if (!is_rational()) fail(ErrorCode::invalid_argument, "element is not rational", to_string());
    return c_[0];
  }

  /// Re-expresses this element in a ring containing its own.
  CoeffElem embed(const RingPtr& target) const {
    if (target == ring_) return *this;
    if (common_ring(ring_, target) != target)
      fail(ErrorCode::ring_mismatch, "cannot embed " + ring_->describe() + " into " + target->describe());
    const std::size_t phi = ring_->phi();
    const long step = target->cyclotomic_order() / ring_->cyclotomic_order();
    auto lift = [&](std::size_t offset) {
      detail::RatPoly p;
      for (std::size_t i = 0; i < phi; ++i) {
        if (sgn(c_[offset + i]) == 0) continue;
        std::size_t e = i * static_cast<std::size_t>(step);
        if (p.size() <= e) p.resize(e + 1);
        p[e] = c_[offset + i];
      }
      return p;
    };
    detail::RatPoly a = lift(0);
    detail::RatPoly b = ring_->has_sqrt() ? lift(phi) : detail::RatPoly{};
    return from_poly_pair(target, std::move(a), std::move(b));
  }

  CoeffElem& operator+=(const CoeffElem& o) {
    unify_with(o);
    const CoeffElem& rhs = o.ring_ == ring_ ? o : o.embedded_copy(ring_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
  }

  CoeffElem& operator-=(const CoeffElem& o) {
    unify_with(o);
    const CoeffElem& rhs = o.ring_ == ring_ ? o : o.embedded_copy(ring_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
  }

  CoeffElem operator-() const {
    CoeffElem r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend CoeffElem operator+(CoeffElem a, const CoeffElem& b) { return a += b; }
  friend CoeffElem operator-(CoeffElem a, const CoeffElem& b) { return a -= b; }

  friend CoeffElem operator*(const CoeffElem& a, const CoeffElem& b) {
    if (a.ring_->is_rationals()) return b.scaled(a.c_[0]);
    if (b.ring_->is_rationals()) return a.scaled(b.c_[0]);
    RingPtr ring = common_ring(a.ring_, b.ring_);
    CoeffElem x = a.embed(ring);
    CoeffElem y = b.embed(ring);
    const std::size_t phi = ring->phi();
    auto part = [&](const CoeffElem& e, std::size_t j) {
      return detail::RatPoly(e.c_.begin() + static_cast<long>(j * phi),
                             e.c_.begin() + static_cast<long>((j + 1) * phi));
    };
    detail::RatPoly x0 = part(x, 0), y0 = part(y, 0);
    detail::RatPoly re = detail::poly_mul(x0, y0);
    detail::RatPoly im;
    if (ring->has_sqrt()) {
      detail::RatPoly x1 = part(x, 1), y1 = part(y, 1);
      detail::RatPoly d = detail::poly_mul(x1, y1);
      if (re.size() < d.size()) re.resize(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) re[i] += d[i] * ring->sqrt_d();
      detail::RatPoly s1 = detail::poly_mul(x0, y1), s2 = detail::poly_mul(x1, y0);
      im.resize(std::max(s1.size(), s2.size()));
      for (std::size_t i = 0; i < s1.size(); ++i) im[i] += s1[i];
      for (std::size_t i = 0; i < s2.size(); ++i) im[i] += s2[i];
    }
    if (re.size() < phi) re.resize(phi);
    if (im.size() < phi) im.resize(phi);
    return from_poly_pair(ring, std::move(re), std::move(im));
  }

  CoeffElem& operator*=(const CoeffElem& o) { return *this = *this * o; }

  CoeffElem scaled(const Rat& s) const {
    CoeffElem r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  /// Multiplicative inverse, found by solving the linear system x * y = 1 over Q.
  CoeffElem inverse() const {
    if (is_zero()) fail(ErrorCode::division_by_zero, "inverse of zero");
    if (ring_->is_rationals()) return CoeffElem(Rat(1) / c_[0]);
    const std::size_t n = ring_->dim();
    // Column k of the multiplication matrix is x * basis_k.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rat> e(n);
      e[k] = 1;
      CoeffElem col = *this * CoeffElem(ring_, std::move(e));
      for (std::size_t i = 0; i < n; ++i) a[i][k] = col.c_[i];
    }
    a[0][n] = 1;
    for (std::size_t col = 0, row = 0; col < n; ++col, ++row) {
      std::size_t piv = row;
      while (piv < n && sgn(a[piv][col]) == 0) ++piv;
      if (piv == n) fail(ErrorCode::not_invertible, "zero divisor has no inverse", to_string());
      std::swap(a[piv], a[row]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == row || sgn(a[i][col]) == 0) continue;
        Rat f = a[i][col] / a[row][col];
        for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
      }
    }
    std::vector<Rat> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = a[i][n] / a[i][i];
    return CoeffElem(ring_, std::move(y));
  }

  friend CoeffElem operator/(const CoeffElem& a, const CoeffElem& b) {
    if (b.ring_->is_rationals()) {
      if (sgn(b.c_[0]) == 0) fail(ErrorCode::division_by_zero, "division by zero");
      return a.scaled(Rat(1) / b.c_[0]);
    }
    return a * b.inverse();
  }

  CoeffElem& operator/=(const CoeffElem& o) { return *this = *this / o; }

  friend bool operator==(const CoeffElem& a, const CoeffElem& b) {
    if (a.ring_ == b.ring_) return a.c_ == b.c_;
    RingPtr ring = common_ring(a.ring_, b.ring_);
    return a.embed(ring).c_ == b.embed(ring).c_;
  }

  /// Human-readable form such as "1/2 + 3*z - 1*r + 2*z^2*r", where z is the
  /// root of unity and r the square root.
  std::string to_string() const {
    std::string s;
    const std::size_t phi = ring_->phi();
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (sgn(c_[k]) == 0) continue;
      if (!s.empty()) s += " + ";
      s += shintani::to_string(c_[k]);
      std::size_t i = k % phi, j = k / phi;
      if (i > 0) s += "*z" + (i > 1 ? "^" + std::to_string(i) : std::string());
      if (j > 0) s += "*r";
    }
    return s.empty() ? "0" : s;
  }

 private:
  void unify_with(const CoeffElem& o) {
    if (o.ring_ == ring_) return;
    RingPtr ring = common_ring(ring_, o.ring_);
    if (ring != ring_) *this = embed(ring);
  }

  CoeffElem embedded_copy(const RingPtr& ring) const { return embed(ring); }

  RingPtr ring_;
  std::vector<Rat> c_;
};

inline bool is_zero(const CoeffElem& x) { return x.is_zero(); }
inline std::string to_string(const CoeffElem& x) { return x.to_string(); }

}  // namespace shintani
