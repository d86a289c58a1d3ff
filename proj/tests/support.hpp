#pragma once

// Random instances shared by the unit tests and the acceptance run.

#include "shintani/cocycle/solomon.hpp"
#include "shintani/cone/decompose.hpp"
#include "shintani/pairing/pair.hpp"
#include "shintani/random.hpp"

namespace shintani::fixtures {

/// Integer-valued table on (1/d)Z^n / fZ^n, zero on the class of 0 when
/// `vanish` is set.
inline SchwartzFn random_schwartz(Rng& rng, std::size_t n, bool vanish) {
  long d = uniform_int(rng, 1, 2), f = uniform_int(rng, 1, 3);
  SchwartzFn phi = SchwartzFn::tabulate(n, d, f, [&](const ResidueClass&) { return CoeffElem(Rat(uniform_int(rng, -2, 2))); });
  if (vanish) phi.set(ResidueClass(n, 0), CoeffElem(0));
  return phi;
}

/// Open cone on 1..n independent integer generators.
inline OpenSimplicialCone random_cone(Rng& rng, std::size_t n) {
  std::size_t r = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(n)));
  while (true) {
    std::vector<QVec> g;
    for (std::size_t i = 0; i < r; ++i) g.push_back(random_vector(rng, n, 3, 1));
    bool ok = true;
    for (const auto& v : g) ok = ok && !is_zero_vector(v);
    if (ok && rank(g) == r) return OpenSimplicialCone(g);
  }
}

/// prod (1 - exp(v_i.z)) through degree `prec`.
inline Series one_minus_exp_product(const std::vector<QVec>& gens, int prec) {
  Series p = Series::constant(gens[0].size(), CoeffElem(1));
  for (const auto& v : gens) {
    Series e = Series::constant(v.size(), CoeffElem(1)) - exp_series(to_form(v), prec);
    p = Series::mul_truncated(p, e, prec);
  }
  return p;
}

/// (sigma - s)(a, b)(w) - sgn (a*tau - b*tau)(w); sgn = +1 is the relation as
/// usually written, -1 the reversed one.
inline Rat solomon_defect(const QMat& a, const QMat& b, const QVec& w, int sgn) {
  Rat lhs = Rat(sigma_eval({a, b}, w)) - solomon_s(a, b, w);
  Rat rhs = act_on_function(a, coboundary_tau_half, w) - act_on_function(b, coboundary_tau_half, w);
  return lhs - Rat(sgn) * rhs;
}

inline bool antiparallel_first_columns(const QMat& a, const QMat& b) {
  Rat cross = a[0][0] * b[1][0] - a[1][0] * b[0][0];
  Rat inner = a[0][0] * b[0][0] + a[1][0] * b[1][0];
  return cross == 0 && sgn(inner) < 0;
}

}  // namespace shintani::fixtures
