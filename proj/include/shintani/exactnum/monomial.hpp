#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "shintani/errors.hpp"

namespace shintani {

/// Upper bound on the number of variables of any polynomial or series.
inline constexpr std::size_t max_vars = 8;

/// Exponent vector of a monomial in at most `max_vars` variables. Unused
/// trailing slots are zero; the variable count lives in the owning polynomial.
struct Monomial {
  std::array<std::uint16_t, max_vars> exps{};

  Monomial() = default;
  Monomial(std::initializer_list<unsigned> e) {
    if (e.size() > max_vars) fail(ErrorCode::invalid_argument, "too many variables in monomial");
    std::size_t i = 0;
    for (unsigned x : e) exps[i++] = static_cast<std::uint16_t>(x);
  }

  static Monomial unit(std::size_t var) {
    Monomial m;
    m.exps.at(var) = 1;
    return m;
  }

  std::uint16_t operator[](std::size_t i) const { return exps[i]; }
  std::uint16_t& operator[](std::size_t i) { return exps[i]; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (auto e : exps) d += e;
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < max_vars; ++i) r.exps[i] = static_cast<std::uint16_t>(exps[i] + o.exps[i]);
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < max_vars; ++i)
      if (exps[i] > o.exps[i]) return false;
    return true;
  }

  auto operator<=>(const Monomial&) const = default;
};

inline std::string to_string(const Monomial& m, std::size_t nvars) {
  std::string s = "(";
  for (std::size_t i = 0; i < nvars; ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + ")";
}

/// Order on exponent vectors used for infinitesimal monomials: the vectors are
/// compared at the highest index where they differ, and the smaller entry there
/// gives the smaller vector. Under this order eps_{i+1} is smaller than every
/// power of eps_i, and the leading term of a series is its smallest monomial.
inline bool eps_less(const Monomial& a, const Monomial& b, std::size_t nvars) {
  for (std::size_t i = nvars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace shintani
