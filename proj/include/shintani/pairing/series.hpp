#pragma once

// Truncated multivariate power series over CoeffRing elements, and the few
// transcendental series the pairing needs: exp(l.z) and t/(e^t - 1) at t = l.z.

#include <map>
#include <string>
#include <vector>

#include "shintani/errors.hpp"
#include "shintani/exactnum/bernoulli.hpp"
#include "shintani/exactnum/coeff_ring.hpp"
#include "shintani/exactnum/sparse_poly.hpp"
#include "shintani/ordered_field/linalg.hpp"

namespace shintani {

using Series = SparsePoly<CoeffElem>;

/// Linear form sum_j l_j z_j.
using LinForm = std::vector<CoeffElem>;

inline LinForm to_form(const QVec& v) { return LinForm(v.begin(), v.end()); }

inline bool is_zero_form(const LinForm& l) {
  for (const auto& c : l)
    if (!c.is_zero()) return false;
  return true;
}

inline std::string to_string(const LinForm& l) {
  std::string s = "[";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) s += ", ";
    s += l[i].to_string();
  }
  return s + "]";
}

inline std::string to_string(const Series& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (m[i] == 0) continue;
      s += "*z" + std::to_string(i + 1);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
  }
  return s;
}

inline Series linear_series(const LinForm& l) {
  Series p(l.size());
  for (std::size_t j = 0; j < l.size(); ++j) p.add_term(Monomial::unit(j), l[j]);
  return p;
}

/// Powers l^0, ..., l^deg of the linear polynomial l.z.
inline std::vector<Series> linear_powers(const LinForm& l, int deg) {
  std::vector<Series> out{Series::constant(l.size(), CoeffElem(1))};
  const Series x = linear_series(l);
  for (int m = 1; m <= deg; ++m) out.push_back(out.back() * x);
  return out;
}

/// sum_{m <= deg} c_m (l.z)^m.
inline Series univariate_at_form(const std::vector<Rat>& c, const LinForm& l, int deg) {
  Series r(l.size());
  auto pw = linear_powers(l, deg);
  for (int m = 0; m <= deg && m < static_cast<int>(c.size()); ++m)
    if (sgn(c[static_cast<std::size_t>(m)]) != 0) r += pw[static_cast<std::size_t>(m)].scaled(CoeffElem(c[static_cast<std::size_t>(m)]));
  return r;
}

inline Series exp_series(const LinForm& l, int deg) {
  std::vector<Rat> c;
  for (int m = 0; m <= deg; ++m) c.emplace_back(Rat(1) / Rat(factorial(static_cast<unsigned>(m))));
  return univariate_at_form(c, l, deg);
}

/// g(l.z) with g(t) = t / (e^t - 1) = sum B_m t^m / m!.
inline Series bernoulli_g_series(const LinForm& l, int deg) {
  std::vector<Rat> c;
  for (int m = 0; m <= deg; ++m)
    c.emplace_back(bernoulli_number(static_cast<unsigned>(m)) / Rat(factorial(static_cast<unsigned>(m))));
  return univariate_at_form(c, l, deg);
}

/// Exact quotient N / (l.z) of a series known through degree `prec`; the
/// result is known through `prec - 1`. Raises NotDivisible when some
/// homogeneous piece of N is not a multiple of l.
inline Series divide_by_form(const Series& num, const LinForm& l, int prec) {
  const std::size_t n = num.nvars();
  std::size_t pivot = n;
  for (std::size_t j = 0; j < l.size(); ++j)
    if (!l[j].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot == n) fail(ErrorCode::zero_form, "division by the zero linear form");
  const CoeffElem inv = CoeffElem(1) / l[pivot];
  // Repeatedly cancel the term with the largest pivot exponent.
  const Series low = num.truncated(prec);
  std::map<Monomial, CoeffElem> rem(low.terms().begin(), low.terms().end());
  Series q(n);
  auto key_less = [&](const Monomial& a, const Monomial& b) {
    if (a[pivot] != b[pivot]) return a[pivot] < b[pivot];
    return a < b;
  };
  while (!rem.empty()) {
    auto best = rem.begin();
    for (auto it = rem.begin(); it != rem.end(); ++it)
      if (key_less(best->first, it->first)) best = it;
    if (best->first[pivot] == 0) break;
    Monomial m = best->first;
    m[pivot] = static_cast<std::uint16_t>(m[pivot] - 1);
    CoeffElem c = best->second * inv;
    q.add_term(m, c);
    for (std::size_t j = 0; j < n; ++j) {
      if (l[j].is_zero()) continue;
      Monomial t = m * Monomial::unit(j);
      CoeffElem v = c * l[j];
      auto [it, inserted] = rem.try_emplace(t, -v);
      if (!inserted) {
        it->second -= v;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
  }
  if (!rem.empty())
    fail(ErrorCode::not_divisible, "pole along a denominator form does not cancel", "form " + to_string(l));
  return q;
}

/// Substitution z_j = sum_i t[j][i] x_i; the result lives in t[0].size() variables.
inline Series substitute_linear(const Series& p, const std::vector<LinForm>& t) {
  if (t.size() != p.nvars()) fail(ErrorCode::invalid_argument, "substitution matrix has wrong row count");
  const std::size_t m = t.empty() ? 0 : t[0].size();
  int deg = std::max(0, p.total_degree());
  std::vector<std::vector<Series>> pw;
  for (const auto& row : t) {
    if (row.size() != m) fail(ErrorCode::invalid_argument, "ragged substitution matrix");
    pw.push_back(linear_powers(row, deg));
  }
  Series r(m);
  for (const auto& [mono, c] : p.terms()) {
    Series term = Series::constant(m, c);
    for (std::size_t j = 0; j < p.nvars(); ++j)
      if (mono[j] > 0) term *= pw[j][mono[j]];
    r += term;
  }
  return r;
}

}  // namespace shintani
