#pragma once

// Exact rationals. Backed by GMP's mpq_class, whose values are kept in lowest
// terms with a positive denominator after every arithmetic operation.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "shintani/errors.hpp"

namespace shintani {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) fail(ErrorCode::division_by_zero, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorCode::division_by_zero, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Rat& x) { return sgn(x); }
inline int sign(const Int& x) { return sgn(x); }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline std::string to_string(const Int& x) { return x.get_str(); }

/// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
inline Rat parse_rat(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    if (s.empty()) fail(ErrorCode::invalid_argument, "empty integer in rational", std::string(text));
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) fail(ErrorCode::invalid_argument, "malformed rational", std::string(text));
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') fail(ErrorCode::invalid_argument, "malformed rational", std::string(text));
    }
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return Int(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  return make_rat(num, den);
}

inline Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Floor of a rational.
inline Int floor_rat(const Rat& x) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

inline Int ceil_rat(const Rat& x) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

/// Scales a rational vector to a primitive integer vector pointing the same way
/// (positive scale factor). The zero vector is returned unchanged.
inline std::vector<Rat> primitive_direction(const std::vector<Rat>& v) {
  Int den_lcm = 1;
  for (const auto& x : v) den_lcm = lcm(den_lcm, x.get_den());
  Int num_gcd = 0;
  for (const auto& x : v) {
    Int scaled = x.get_num() * (den_lcm / x.get_den());
    num_gcd = gcd(num_gcd, scaled);
  }
  if (num_gcd == 0) return v;
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(Int(x.get_num() * (den_lcm / x.get_den()) / num_gcd));
  return out;
}

}  // namespace shintani
