#pragma once

#include <utility>

#include "shintani/errors.hpp"
#include "shintani/exactnum/sparse_poly.hpp"

namespace shintani {

/// Term of `p` with the smallest exponent vector under `eps_less`; this is the
/// term that dominates when every variable is an infinitesimal.
inline std::pair<Monomial, Rat> leading_term(const MPoly& p) {
  if (p.is_zero()) fail(ErrorCode::invalid_argument, "leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    if (eps_less(it->first, best->first, p.nvars())) best = it;
  }
  return *best;
}

/// Sign of a polynomial in infinitesimals: the sign of its leading coefficient.
inline int eps_sign(const MPoly& p) {
  if (p.is_zero()) return 0;
  return sgn(leading_term(p).second);
}

/// Substitutes variable slot j of `p` by slot `target[j]` of a polynomial in
/// `nvars` variables.
inline MPoly rename_vars(const MPoly& p, const std::vector<std::size_t>& target, std::size_t nvars) {
  if (target.size() != p.nvars()) fail(ErrorCode::invalid_argument, "variable map has wrong length");
  MPoly r(nvars);
  for (const auto& [m, c] : p.terms()) {
    Monomial out;
    for (std::size_t j = 0; j < p.nvars(); ++j) {
      if (target[j] >= nvars) fail(ErrorCode::invalid_argument, "variable map out of range");
      out[target[j]] = static_cast<std::uint16_t>(out[target[j]] + m[j]);
    }
    r.add_term(out, c);
  }
  return r;
}

}  // namespace shintani
