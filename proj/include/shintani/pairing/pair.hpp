#pragma once

// Pairing of cone combinations against test functions:
//   <C(v_1..v_r), phi> = prod 1/(1 - exp(v_i.z)) * sum_{w in P} phi(w) exp(w.z)
// with P the half-open parallelotope on the v_i, once every v_i is a period.

#include <future>
#include <map>
#include <optional>

#include "shintani/cone/cone_combo.hpp"
#include "shintani/pairing/schwartz.hpp"

namespace shintani {

namespace detail {

/// Coordinates in the basis `gens` of their span, via a full-rank square
/// subsystem chosen once.
class SpanCoordinates {
 public:
  explicit SpanCoordinates(const std::vector<QVec>& gens) : gens_(gens) {
    const std::size_t n = gens[0].size(), r = gens.size();
    QMat chosen;
    for (std::size_t i = 0; i < n && chosen.size() < r; ++i) {
      QVec row(r);
      for (std::size_t j = 0; j < r; ++j) row[j] = gens[j][i];
      QMat trial = chosen;
      trial.push_back(row);
      if (rank(trial) == trial.size()) {
        chosen = std::move(trial);
        rows_.push_back(i);
      }
    }
    if (chosen.size() != r) fail(ErrorCode::invalid_argument, "generators are linearly dependent");
    inv_ = inverse(chosen);
  }

  std::optional<QVec> operator()(const QVec& w) const {
    QVec sub;
    for (auto i : rows_) sub.push_back(w[i]);
    QVec x = mat_vec(inv_, sub);
    for (std::size_t i = 0; i < w.size(); ++i) {
      Rat s = 0;
      for (std::size_t j = 0; j < gens_.size(); ++j) s += x[j] * gens_[j][i];
      if (s != w[i]) return std::nullopt;
    }
    return x;
  }

 private:
  std::vector<QVec> gens_;
  std::vector<std::size_t> rows_;
  QMat inv_;
};

}  // namespace detail

/// Points of (1/d)Z^n in {sum x_i v_i : x_i in (0, 1]}, in lexicographic order.
inline std::vector<QVec> parallelotope_points(const std::vector<QVec>& gens, long d) {
  if (gens.empty()) fail(ErrorCode::invalid_argument, "parallelotope needs at least one generator");
  if (d < 1) fail(ErrorCode::invalid_argument, "support denominator must be positive");
  const std::size_t n = gens[0].size();
  const detail::SpanCoordinates coords(gens);
  // Integer box for d*w.
  std::vector<Int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat a = 0, b = 0;
    for (const auto& g : gens) (sgn(g[i]) < 0 ? a : b) += g[i];
    lo[i] = ceil_rat(a * d);
    hi[i] = floor_rat(b * d);
  }
  std::vector<QVec> out;
  std::vector<Int> x = lo;
  while (true) {
    QVec w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = Rat(x[i]) / d;
    if (auto c = coords(w)) {
      bool inside = std::all_of(c->begin(), c->end(), [](const Rat& t) { return sgn(t) > 0 && t <= 1; });
      if (inside) out.push_back(std::move(w));
    }
    std::size_t i = n;
    while (i-- > 0) {
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Least k >= 1 with k*v in f Z^n.
inline Int period_multiple(const QVec& v, long f) {
  Int k = 1;
  for (const auto& x : v) k = lcm(k, Rat(x / f).get_den());
  return k;
}

/// Generators of the cone scaled into the period lattice, each further
/// multiplied by `extra[i]` when given.
inline std::vector<QVec> period_generators(const OpenSimplicialCone& cone, const SchwartzFn& phi,
                                           const std::vector<long>& extra = {}) {
  std::vector<QVec> out;
  for (std::size_t i = 0; i < cone.dim(); ++i) {
    QVec v = cone.generators()[i];
    Rat k = Rat(period_multiple(v, phi.period()));
    if (!extra.empty()) {
      if (extra.size() != cone.dim() || extra[i] < 1) fail(ErrorCode::invalid_argument, "bad extra scaling");
      k *= extra[i];
    }
    for (auto& x : v) x *= k;
    out.push_back(std::move(v));
  }
  return out;
}

/// sum_{w in P} phi(w) exp(w.z) through degree `prec`, via the moments
/// sum phi(w) w^a / a! grouped by residue class.
inline Series parallelotope_sum(const std::vector<QVec>& points, const SchwartzFn& phi, int prec) {
  const std::size_t n = phi.dim();
  std::map<ResidueClass, std::map<Monomial, Rat>> moments;
  std::vector<Monomial> monos;
  {
    Monomial m;
    while (true) {
      if (static_cast<int>(m.total_degree()) <= prec) monos.push_back(m);
      std::size_t i = 0;
      while (i < n && m[i] == prec) m[i++] = 0;
      if (i == n) break;
      ++m[i];
    }
  }
  for (const auto& w : points) {
    auto c = phi.class_of(w);
    if (!c || phi.value_of_class(*c).is_zero()) continue;
    auto& mom = moments[*c];
    for (const auto& m : monos) {
      Rat p = 1;
      for (std::size_t i = 0; i < n; ++i)
        for (unsigned e = 0; e < m[i]; ++e) p *= w[i];
      mom[m] += p;
    }
  }
  Series s(n);
  for (const auto& [c, mom] : moments) {
    const CoeffElem v = phi.value_of_class(c);
    for (const auto& [m, p] : mom) {
      Int fact = 1;
      for (std::size_t i = 0; i < n; ++i) fact *= factorial(m[i]);
      s.add_term(m, v.scaled(p / Rat(fact)));
    }
  }
  return s;
}

/// <cone, phi> as a quotient series with denominators v_i.z, exact through
/// Laurent degree `dmax`.
inline QuotSeries pair_cone(const OpenSimplicialCone& cone, const SchwartzFn& phi, int dmax,
                            const std::vector<long>& extra_scale = {}) {
  if (cone.ambient_dim() != phi.dim()) fail(ErrorCode::invalid_argument, "cone and test function dimensions differ");
  const auto gens = period_generators(cone, phi, extra_scale);
  const int r = static_cast<int>(gens.size());
  const int prec = dmax + r;
  Series num = parallelotope_sum(parallelotope_points(gens, phi.support_denominator()), phi, prec);
  std::vector<LinForm> den;
  for (const auto& v : gens) {
    LinForm l = to_form(v);
    if (is_zero_form(l)) fail(ErrorCode::zero_form, "generator gives the zero form", cone.describe());
    num = Series::mul_truncated(num, bernoulli_g_series(l, prec), prec);
    den.push_back(std::move(l));
  }
  if (r % 2 == 1) num = -num;
  return QuotSeries(std::move(num), std::move(den), prec);
}

/// Coefficient-weighted sum of cone pairings. Equal cones are merged and the
/// sum is taken in the order of the cones' descriptions, so the result does
/// not depend on how the work was scheduled.
inline QuotSeries pair_combo(const ConeCombo& c, const SchwartzFn& phi, int dmax, bool parallel = true) {
  if (c.n != phi.dim()) fail(ErrorCode::invalid_argument, "combination and test function dimensions differ");
  if (sgn(c.constant) != 0 && !phi.vanishes_near_zero())
    fail(ErrorCode::constant_against_non_vanishing, "constant term paired with a function not vanishing near 0",
         "constant " + to_string(c.constant));
  std::map<std::string, std::pair<Rat, const OpenSimplicialCone*>> merged;
  for (const auto& t : c.terms) {
    auto [it, inserted] = merged.try_emplace(t.cone.describe(), t.coeff, &t.cone);
    if (!inserted) it->second.first += t.coeff;
  }
  std::vector<std::pair<Rat, const OpenSimplicialCone*>> work;
  for (const auto& [key, v] : merged)
    if (sgn(v.first) != 0) work.push_back(v);
  std::vector<QuotSeries> parts(work.size());
  if (parallel && work.size() > 1) {
    std::vector<std::future<QuotSeries>> futs;
    for (const auto& w : work)
      futs.push_back(std::async(std::launch::async, [&phi, dmax, cone = w.second] { return pair_cone(*cone, phi, dmax); }));
    for (std::size_t i = 0; i < futs.size(); ++i) parts[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < work.size(); ++i) parts[i] = pair_cone(*work[i].second, phi, dmax);
  }
  QuotSeries sum = QuotSeries::power_series(Series(c.n), dmax);
  for (std::size_t i = 0; i < work.size(); ++i) sum += parts[i].scaled(CoeffElem(work[i].first));
  return sum;
}

}  // namespace shintani
