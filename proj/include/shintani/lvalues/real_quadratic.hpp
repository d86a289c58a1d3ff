#pragma once

// Real quadratic fields Q(sqrt D) with integral basis (1, w), their totally
// positive units, and L-values at negative integers through sigma(1, u).

#include <optional>
#include <set>

#include "shintani/lvalues/dirichlet.hpp"

namespace shintani {

/// a + b w in the ring of integers.
struct QuadInt {
  Int a, b;
};

class RealQuadField {
 public:
  long D() const noexcept { return d_; }
  /// w = sqrt(D) when D != 1 mod 4, else (1 + sqrt(D)) / 2.
  bool half_integral() const noexcept { return d_ % 4 == 1; }
  /// Trace and norm of w, so that w^2 = t w - n.
  long trace_w() const noexcept { return half_integral() ? 1 : 0; }
  long norm_w() const noexcept { return half_integral() ? (1 - d_) / 4 : -d_; }
  long discriminant() const noexcept { return half_integral() ? d_ : 4 * d_; }

  const QuadInt& fundamental_unit() const noexcept { return eps_; }
  int fundamental_unit_norm() const noexcept { return eps_norm_; }
  const QuadInt& totally_positive_unit() const noexcept { return u_; }
  /// Multiplication by u in the basis (1, w); columns are u*1 and u*w.
  const QMat& unit_matrix() const noexcept { return u_mat_; }
  long narrow_class_number() const noexcept { return narrow_h_; }
  long class_number() const noexcept { return narrow_h_ / ((eps_norm_ == -1) ? 1 : 2); }
  RingPtr ring() const { return CoeffRing::get(1, d_); }

  Int norm(const QuadInt& x) const { return x.a * x.a + trace_w() * x.a * x.b + norm_w() * x.b * x.b; }

  QuadInt mul(const QuadInt& x, const QuadInt& y) const {
    // (a + b w)(c + d w) = ac - n bd + (ad + bc + t bd) w
    return {x.a * y.a - norm_w() * x.b * y.b, x.a * y.b + x.b * y.a + trace_w() * x.b * y.b};
  }

  /// The two real embeddings of a + b w as elements of Q(sqrt D).
  CoeffElem embed(const QuadInt& x, int which) const {
    const RingPtr r = ring();
    CoeffElem w = half_integral() ? CoeffElem::from_rat(r, make_rat(1, 2)) + CoeffElem::sqrt_generator(r).scaled(make_rat(1, 2))
                                  : CoeffElem::sqrt_generator(r);
    if (which == 2) w = CoeffElem::from_rat(r, Rat(trace_w())) - w;
    return CoeffElem::from_rat(r, Rat(x.a)) + w.scaled(Rat(x.b));
  }

  /// Rows j, columns i: tau_i(b_j), so z_j = sum_i tau_i(b_j) t_i.
  std::vector<LinForm> transition() const {
    return {{embed({1, 0}, 1), embed({1, 0}, 2)}, {embed({0, 1}, 1), embed({0, 1}, 2)}};
  }

  /// True when x is positive at the embedding `which`.
  bool positive(const QuadInt& x, int which) const {
    // 2(a + b w) = 2a + bt + b (2w - t), and 2w - t is sqrt D or 2 sqrt D
    // at the first embedding, its negative at the second.
    Int p = 2 * x.a + trace_w() * x.b;
    Int q = x.b * (half_integral() ? 1 : 2);
    if (which == 2) q = -q;
    // sign(p + q sqrt D)
    if (sgn(p) >= 0 && sgn(q) >= 0) return sgn(p) > 0 || sgn(q) > 0;
    if (sgn(p) <= 0 && sgn(q) <= 0) return false;
    Int lhs = p * p, rhs = q * q * d_;
    return sgn(p) > 0 ? lhs > rhs : rhs > lhs;
  }

  friend RealQuadField build_real_quad(long D);

 private:
  long d_ = 0;
  QuadInt eps_, u_;
  int eps_norm_ = 0;
  QMat u_mat_;
  long narrow_h_ = 0;
};

namespace detail {

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Number of cycles of reduced primitive forms of discriminant disc > 0
/// under the reduction operator, i.e. the narrow class number.
inline long narrow_class_number(long disc) {
  const long F = isqrt(Int(disc)).get_si();
  using Form = std::array<long, 3>;
  std::set<Form> reduced;
  for (long b = 1; b <= F; ++b) {
    if ((b * b - disc) % 4 != 0) continue;
    const long prod = (b * b - disc) / 4;  // a c, negative
    for (long a = -F; a <= F; ++a) {
      if (a == 0 || prod % a != 0) continue;
      const long aa = a < 0 ? -a : a;
      if (!(2 * aa + b > F && 2 * aa - b <= F)) continue;
      long c = prod / a;
      if (std::gcd(std::gcd(aa, b), c < 0 ? -c : c) != 1) continue;
      reduced.insert({a, b, c});
    }
  }
  auto rho = [&](const Form& f) {
    const long c = f[2], m = 2 * (c < 0 ? -c : c);
    long b2 = F - (((F + f[1]) % m) + m) % m;
    return Form{c, b2, (b2 * b2 - disc) / (4 * c)};
  };
  std::set<Form> seen;
  long cycles = 0;
  for (const auto& f : reduced) {
    if (seen.count(f)) continue;
    ++cycles;
    Form g = f;
    while (seen.insert(g).second) {
      g = rho(g);
      if (!reduced.count(g)) fail(ErrorCode::internal, "reduction left the set of reduced forms");
    }
  }
  return cycles;
}

}  // namespace detail

inline RealQuadField build_real_quad(long D) {
  if (D < 2 || !is_square_free(D)) fail(ErrorCode::not_square_free, "D must be a square-free integer > 1", std::to_string(D));
  RealQuadField K;
  K.d_ = D;
  const long t = K.trace_w();
  // Continued fraction of w = (P + sqrt D) / Q.
  Int P = t, Q = t ? 2 : 1;
  const Int s = detail::isqrt(Int(D));
  Int p = 1, p_prev = 0, q = 0, q_prev = 1;  // p_{-1}, p_{-2}, q_{-1}, q_{-2}
  for (int step = 0; step < 100000; ++step) {
    Int num = sgn(Q) > 0 ? Int(P + s) : Int(P + s + 1);
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
    Int pn = a * p + p_prev, qn = a * q + q_prev;
    p_prev = p;
    p = pn;
    q_prev = q;
    q = qn;
    // p - q w has norm p^2 - t p q + n q^2.
    Int nrm = p * p - t * p * q + K.norm_w() * q * q;
    if (nrm == 1 || nrm == -1) {
      K.eps_ = {p - q * t, q};  // conjugate of p - q w
      K.eps_norm_ = nrm.get_si();
      break;
    }
    P = a * Q - P;
    Q = (Int(D) - P * P) / Q;
  }
  if (K.eps_norm_ == 0) fail(ErrorCode::internal, "no unit found in the continued fraction");
  K.u_ = K.eps_norm_ == 1 ? K.eps_ : K.mul(K.eps_, K.eps_);
  if (!K.positive(K.u_, 1) || !K.positive(K.u_, 2)) fail(ErrorCode::internal, "unit is not totally positive");
  const Int& a = K.u_.a;
  const Int& b = K.u_.b;
  K.u_mat_ = {{Rat(a), Rat(-b * K.norm_w())}, {Rat(b), Rat(a + b * t)}};
  K.narrow_h_ = detail::narrow_class_number(K.discriminant());
  return K;
}

/// The test function x -> psi(N x) on the ring of integers, as a function of
/// the coordinates in the basis (1, w).
inline SchwartzFn norm_character(const RealQuadField& K, const DirichletChar& psi) {
  return SchwartzFn::tabulate(2, 1, psi.modulus(), [&](const ResidueClass& c) {
    Int n = K.norm({Int(c[0]), Int(c[1])});
    Int r = n % psi.modulus();
    return psi(r.get_si());
  });
}

/// L(chi, -r) = (r!)^2 [t1^r t2^r] of <sigma(1, u), chi> at z = T t.
inline CoeffElem quad_L_value(const RealQuadField& K, const SchwartzFn& chi, unsigned r, int dmax,
                              bool allow_large_narrow_class = false) {
  if (chi.dim() != 2) fail(ErrorCode::invalid_argument, "character on the ring of integers must be two-dimensional");
  if (r < 1) fail(ErrorCode::invalid_argument, "r must be positive");
  if (dmax < 2 * static_cast<int>(r))
    fail(ErrorCode::truncation_too_small, "need dmax >= 2r", "dmax " + std::to_string(dmax));
  if (K.narrow_class_number() != 1 && !allow_large_narrow_class)
    fail(ErrorCode::narrow_class_number_not_one, "narrow class number is " + std::to_string(K.narrow_class_number()),
         "D = " + std::to_string(K.D()));
  ConeCombo c = sigma_decompose({identity_matrix(2), K.unit_matrix()});
  QuotSeries q = substitute(pair_combo(c, chi, dmax), K.transition());
  Rat fact = Rat(factorial(r));
  CoeffElem v = laurent_coefficient(q, {static_cast<int>(r), static_cast<int>(r)}).scaled(fact * fact);
  bool real_valued = true;
  for (const auto& [cls, val] : chi.table()) real_valued = real_valued && val.is_rational();
  if (real_valued && !v.is_rational())
    fail(ErrorCode::internal, "real-valued character produced an irrational value", v.to_string());
  return v;
}

/// S(m1, m2) = m1! m2! [z1^m1 z2^m2] <sigma(1, u), chi>, for m1 + m2 <= 2 rmax.
/// Requires the poles to cancel.
inline std::map<std::pair<unsigned, unsigned>, CoeffElem> s_coeffs(const RealQuadField& K, const SchwartzFn& chi,
                                                                    unsigned rmax, int dmax) {
  if (dmax < 2 * static_cast<int>(rmax))
    fail(ErrorCode::truncation_too_small, "need dmax >= 2 rmax", "dmax " + std::to_string(dmax));
  ConeCombo c = sigma_decompose({identity_matrix(2), K.unit_matrix()});
  Series s = reduce_to_power_series(pair_combo(c, chi, dmax));
  std::map<std::pair<unsigned, unsigned>, CoeffElem> out;
  for (unsigned m1 = 0; m1 <= 2 * rmax; ++m1)
    for (unsigned m2 = 0; m1 + m2 <= 2 * rmax; ++m2)
      out[{m1, m2}] = s.coeff(Monomial{m1, m2}).scaled(Rat(factorial(m1) * factorial(m2)));
  return out;
}

/// L(chi, -r) recomputed from the S table by the change of variables z = T t.
inline CoeffElem quad_L_from_s_coeffs(const RealQuadField& K,
                                      const std::map<std::pair<unsigned, unsigned>, CoeffElem>& s, unsigned r) {
  Series z(2);
  for (const auto& [m, v] : s)
    z.add_term(Monomial{m.first, m.second}, v.scaled(Rat(1) / Rat(factorial(m.first) * factorial(m.second))));
  Series t = substitute_linear(z.homogeneous_part(2 * static_cast<int>(r)), K.transition());
  Rat fact = Rat(factorial(r));
  return t.coeff(Monomial{r, r}).scaled(fact * fact);
}

/// zeta_K(-1) = (1/60) sum_{b^2 < disc, b = disc mod 2} sigma_1((disc - b^2) / 4).
inline Rat siegel_zeta_minus_one(long disc) {
  auto sigma1 = [](long m) {
    long s = 0;
    for (long d = 1; d <= m; ++d)
      if (m % d == 0) s += d;
    return s;
  };
  long total = 0;
  for (long b = -disc; b <= disc; ++b)
    if (b * b < disc && ((b - disc) % 2 == 0)) total += sigma1((disc - b * b) / 4);
  return make_rat(total, 60);
}

}  // namespace shintani
