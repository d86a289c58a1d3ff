#pragma once

// Dirichlet characters and L(chi, 1 - r) over the rationals, both from the
// Bernoulli-polynomial formula and through the one-dimensional cocycle.

#include <numeric>
#include <set>
#include <vector>

#include "shintani/cone/decompose.hpp"
#include "shintani/exactnum/bernoulli.hpp"
#include "shintani/pairing/pair.hpp"

namespace shintani {

class DirichletChar {
 public:
  /// Character mod f from its values on 0..f-1; validated for
  /// multiplicativity and vanishing off the units.
  DirichletChar(long f, std::vector<CoeffElem> values) : f_(f), v_(std::move(values)) {
    if (f < 1) fail(ErrorCode::invalid_argument, "modulus must be positive");
    if (static_cast<long>(v_.size()) != f) fail(ErrorCode::invalid_argument, "value table must have one entry per residue");
    for (long a = 0; a < f; ++a) {
      bool unit = std::gcd(a, f) == 1;
      if (!unit && !v_[static_cast<std::size_t>(a)].is_zero())
        fail(ErrorCode::invalid_argument, "character must vanish off the units", "n = " + std::to_string(a));
      if (unit && v_[static_cast<std::size_t>(a)].is_zero())
        fail(ErrorCode::invalid_argument, "character vanishes at a unit", "n = " + std::to_string(a));
    }
    if (!(value(1) == CoeffElem(1))) fail(ErrorCode::invalid_argument, "character must send 1 to 1");
    for (long a = 0; a < f; ++a)
      for (long b = a; b < f; ++b)
        if (!(value(a * b) == value(a) * value(b)))
          fail(ErrorCode::invalid_argument, "character is not multiplicative",
               std::to_string(a) + " * " + std::to_string(b));
  }

  static DirichletChar trivial(long f = 1) {
    std::vector<CoeffElem> v;
    for (long a = 0; a < f; ++a) v.emplace_back(std::gcd(a, f) == 1 ? 1 : 0);
    return DirichletChar(f, std::move(v));
  }

  long modulus() const noexcept { return f_; }
  const std::vector<CoeffElem>& values() const noexcept { return v_; }

  CoeffElem value(long n) const {
    long r = n % f_;
    if (r < 0) r += f_;
    return v_[static_cast<std::size_t>(r)];
  }
  CoeffElem operator()(long n) const { return value(n); }

  bool is_trivial() const {
    for (long a = 0; a < f_; ++a)
      if (std::gcd(a, f_) == 1 && !(value(a) == CoeffElem(1))) return false;
    return true;
  }
  bool is_even() const { return value(-1) == CoeffElem(1); }

  /// Smallest d | f such that chi is trivial on units congruent to 1 mod d.
  long conductor() const {
    for (long d = 1; d <= f_; ++d) {
      if (f_ % d != 0) continue;
      bool ok = true;
      for (long a = 1; a < f_ && ok; a += d)
        if (std::gcd(a, f_) == 1) ok = value(a) == CoeffElem(1);
      if (ok) return d;
    }
    return f_;
  }

  /// The same character read at modulus m (a multiple of f).
  DirichletChar lifted(long m) const {
    if (m % f_ != 0) fail(ErrorCode::invalid_argument, "new modulus must be a multiple of the old one");
    std::vector<CoeffElem> v;
    for (long a = 0; a < m; ++a) v.push_back(std::gcd(a, m) == 1 ? value(a) : CoeffElem(0));
    return DirichletChar(m, std::move(v));
  }

  friend DirichletChar operator*(const DirichletChar& a, const DirichletChar& b) {
    long m = std::lcm(a.f_, b.f_);
    std::vector<CoeffElem> v;
    for (long n = 0; n < m; ++n) v.push_back(std::gcd(n, m) == 1 ? a.value(n) * b.value(n) : CoeffElem(0));
    return DirichletChar(m, std::move(v));
  }

  /// The character as a function on Zhat supported on Zhat, of period f.
  SchwartzFn as_schwartz() const {
    return SchwartzFn::tabulate(1, 1, f_, [&](const ResidueClass& c) { return value(c[0]); });
  }

  std::string describe() const {
    std::string s = "chi mod " + std::to_string(f_) + " [";
    for (long a = 0; a < f_; ++a) s += (a ? ", " : "") + value(a).to_string();
    return s + "]";
  }

 private:
  long f_;
  std::vector<CoeffElem> v_;
};

/// Kronecker symbol (d/n) for a fundamental discriminant d, as a character
/// mod |d|.
inline DirichletChar kronecker_character(long d) {
  auto legendre = [](long a, long p) {  // p odd prime
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0L;
    long r = 1, base = a, e = (p - 1) / 2;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r == 1 ? 1L : -1L;
  };
  auto kron = [&](long dd, long n) {
    long result = 1;
    for (long p = 2; n > 1; ++p) {
      while (n % p == 0) {
        n /= p;
        long s;
        if (p == 2) {
          if (dd % 2 == 0) return 0L;
          long m8 = ((dd % 8) + 8) % 8;
          s = (m8 == 1 || m8 == 7) ? 1 : -1;
        } else {
          s = legendre(dd, p);
        }
        result *= s;
        if (result == 0) return 0L;
      }
    }
    return result;
  };
  const long f = d < 0 ? -d : d;
  std::vector<CoeffElem> v;
  for (long n = 0; n < f; ++n) v.emplace_back(std::gcd(n, f) == 1 ? kron(d, n) : 0L);
  return DirichletChar(f, std::move(v));
}

/// All characters mod f, values in Q(zeta_e) with e the exponent of (Z/f)^x.
inline std::vector<DirichletChar> characters_mod(long f) {
  if (f < 1) fail(ErrorCode::invalid_argument, "modulus must be positive");
  std::vector<long> units;
  for (long a = 1; a <= f; ++a)
    if (std::gcd(a % f, f) == 1) units.push_back(a % f);
  auto order = [&](long a) {
    long k = 1, x = a % f;
    while (x != 1 % f) {
      x = x * a % f;
      ++k;
    }
    return k;
  };
  long e = 1;
  for (long a : units) e = std::lcm(e, order(a));
  // Greedy generating set; each new generator enlarges the subgroup.
  std::vector<long> gens;
  std::set<long> sub{1 % f};
  for (long a : units) {
    if (sub.count(a)) continue;
    gens.push_back(a);
    std::set<long> grown = sub;
    bool changed = true;
    while (changed) {
      changed = false;
      for (long x : std::vector<long>(grown.begin(), grown.end()))
        for (long g : gens)
          if (grown.insert(x * g % f).second) changed = true;
    }
    sub = std::move(grown);
  }
  RingPtr ring = e <= 2 ? CoeffRing::rationals() : CoeffRing::get(static_cast<int>(e));
  auto root = [&](long k) {
    if (e <= 2) return CoeffElem((k % e) == 0 ? 1 : -1);
    return CoeffElem::root_of_unity(ring, k);
  };
  std::vector<DirichletChar> out;
  std::vector<long> expo(gens.size(), 0);
  while (true) {
    // Assign chi(g_i) = zeta_e^expo_i and propagate; discard on conflict.
    std::map<long, long> log{{1 % f, 0}};
    bool ok = true;
    std::vector<long> frontier{1 % f};
    while (!frontier.empty() && ok) {
      std::vector<long> next;
      for (long x : frontier)
        for (std::size_t i = 0; i < gens.size() && ok; ++i) {
          long y = x * gens[i] % f;
          long ly = (log[x] + expo[i]) % e;
          auto [it, inserted] = log.try_emplace(y, ly);
          if (inserted) {
            next.push_back(y);
          } else if (it->second != ly) {
            ok = false;
          }
        }
      frontier = std::move(next);
    }
    if (ok) {
      std::vector<CoeffElem> v(static_cast<std::size_t>(f), CoeffElem(0));
      for (const auto& [x, l] : log) v[static_cast<std::size_t>(x)] = root(l);
      out.emplace_back(f, std::move(v));
    }
    std::size_t i = 0;
    while (i < expo.size() && ++expo[i] == e) expo[i++] = 0;
    if (i == expo.size()) break;
  }
  return out;
}

/// L(chi, 1 - r) = -(f^(r-1) / r) sum_{n=1}^{f} chi(n) B_r(n / f).
inline CoeffElem dirichlet_L_closed(const DirichletChar& chi, unsigned r) {
  if (r < 1) fail(ErrorCode::invalid_argument, "r must be positive");
  const long f = chi.modulus();
  CoeffElem s(0);
  for (long n = 1; n <= f; ++n) {
    CoeffElem c = chi(n);
    if (!c.is_zero()) s += c.scaled(bernoulli_poly(r, make_rat(n, f)));
  }
  Int fp;
  mpz_ui_pow_ui(fp.get_mpz_t(), static_cast<unsigned long>(f), r - 1);
  Rat scale = -Rat(fp) / Rat(r);
  return s.scaled(scale);
}

/// L(chi, 1 - r) as (r-1)! times the z^(r-1) coefficient of the pairing of
/// sigma((1)) with chi.
inline CoeffElem dirichlet_L_via_cocycle(const DirichletChar& chi, unsigned r, int dmax) {
  if (r < 1) fail(ErrorCode::invalid_argument, "r must be positive");
  if (dmax < static_cast<int>(r) - 1)
    fail(ErrorCode::truncation_too_small, "need dmax >= r - 1", "dmax " + std::to_string(dmax));
  ConeCombo c = sigma_decompose({QMat{QVec{Rat(1)}}});
  QuotSeries q = pair_combo(c, chi.as_schwartz(), dmax);
  const Rat fact = Rat(factorial(r - 1));
  try {
    Series s = reduce_to_power_series(q);
    return s.coeff(Monomial{r - 1}).scaled(fact);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_divisible) throw;
  }
  return laurent_coefficient(q, {static_cast<int>(r) - 1}).scaled(fact);
}

}  // namespace shintani
