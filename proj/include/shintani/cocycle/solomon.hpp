#pragma once

// Dimension-two material: Solomon's half-weighted cocycle s, the function tau
// with value 1/2 on the positive x-axis, and the closed-form table of
// sigma(1, a) used as an independent oracle for sigma_eval.

#include "shintani/cocycle/sigma.hpp"

namespace shintani {

/// Left action on functions of the plane: (a * f)(w) = sign(det a) f(a^-1 w).
template <class F>
Rat act_on_function(const QMat& a, F&& f, const QVec& w) {
  Rat d = determinant(a);
  if (d == 0) fail(ErrorCode::singular_matrix, "acting matrix is not invertible", to_string(a));
  Rat v = f(solve(a, w));
  return sgn(d) > 0 ? v : Rat(-v);
}

/// s(a, b)(w) from the first columns u = a e_1, v = b e_1: sign det(u, v) on
/// the open cone, half of it on the two boundary rays, 0 when u, v are not a
/// basis.
inline Rat solomon_s(const QMat& a, const QMat& b, const QVec& w) {
  if (w.size() != 2 || a.size() != 2 || b.size() != 2) fail(ErrorCode::invalid_argument, "s is defined in dimension 2");
  if (is_zero_vector(w)) fail(ErrorCode::zero_vector, "s is not defined at the origin");
  QVec u{a[0][0], a[1][0]}, v{b[0][0], b[1][0]};
  Rat det = u[0] * v[1] - u[1] * v[0];
  if (det == 0) return 0;
  // w = x u + y v
  Rat x = (w[0] * v[1] - w[1] * v[0]) / det;
  Rat y = (u[0] * w[1] - u[1] * w[0]) / det;
  const Rat s = sgn(det);
  if (sgn(x) > 0 && sgn(y) > 0) return s;
  if ((sgn(x) > 0 && sgn(y) == 0) || (sgn(x) == 0 && sgn(y) > 0)) return s / 2;
  return 0;
}

/// 1/2 on the open positive x-axis, 0 elsewhere.
inline Rat coboundary_tau_half(const QVec& w) {
  if (w.size() != 2) fail(ErrorCode::invalid_argument, "tau is defined in dimension 2");
  if (is_zero_vector(w)) fail(ErrorCode::zero_vector, "tau is not defined at the origin");
  return (sgn(w[1]) == 0 && sgn(w[0]) > 0) ? make_rat(1, 2) : Rat(0);
}

/// Which version of the n = 2 table to use. The two differ in one cell
/// (lower-left entry nonzero, a < 0 < c): `printed` has cx - by <= 0 there,
/// `rederived` has cx - by >= 0, which is what solving the inequalities gives.
enum class ClosedFormTable { rederived, printed };

/// Parameters of the factorisation used by the table. Upper-triangular a is
/// [[a, b], [0, c]]; otherwise a = [[a, b], [0, c]] J [[1, d], [0, 1]] with J
/// the swap, i.e. a = [[b, a + b d], [c, c d]].
struct N2Case {
  bool triangular;
  Rat a, b, c, d;
};

inline N2Case classify_n2(const QMat& alpha) {
  if (alpha.size() != 2 || alpha[0].size() != 2 || alpha[1].size() != 2)
    fail(ErrorCode::invalid_argument, "closed form needs a 2x2 matrix");
  if (determinant(alpha) == 0) fail(ErrorCode::singular_matrix, "matrix is not invertible", to_string(alpha));
  if (sgn(alpha[1][0]) == 0) return {true, alpha[0][0], alpha[0][1], alpha[1][1], Rat(0)};
  Rat c = alpha[1][0], b = alpha[0][0];
  Rat d = alpha[1][1] / c;
  Rat a = alpha[0][1] - b * d;
  if (sgn(a) == 0 || sgn(c) == 0) fail(ErrorCode::case_decomposition_failure, "degenerate factorisation", to_string(alpha));
  return {false, a, b, c, d};
}

inline int closed_form_sigma_n2(const QMat& alpha, const QVec& w, ClosedFormTable table = ClosedFormTable::rederived) {
  if (w.size() != 2) fail(ErrorCode::invalid_argument, "closed form is for points of the plane");
  if (is_zero_vector(w)) fail(ErrorCode::zero_vector, "sigma is not defined at the origin");
  N2Case k = classify_n2(alpha);
  const int sa = sgn(k.a), sc = sgn(k.c);
  const int sx = sgn(w[0]), sy = sgn(w[1]);
  if (k.triangular) {
    if (sa > 0 && sc > 0) return 0;
    if (sa > 0) return (sx > 0 && sy == 0) ? -1 : 0;
    if (sc > 0) return sy > 0 ? 1 : 0;
    return (sy > 0 || (sy == 0 && sx < 0)) ? 1 : 0;
  }
  const int sl = sgn(k.c * w[0] - k.b * w[1]);
  if (sa > 0 && sc > 0) return (sy > 0 && sl > 0) ? 1 : 0;
  if (sa > 0) return (sy <= 0 && sl < 0) ? -1 : 0;
  if (sc > 0) {
    bool lin = table == ClosedFormTable::printed ? sl <= 0 : sl >= 0;
    return (sy > 0 && lin) ? 1 : 0;
  }
  return (sy <= 0 && sl <= 0) ? -1 : 0;
}

}  // namespace shintani
