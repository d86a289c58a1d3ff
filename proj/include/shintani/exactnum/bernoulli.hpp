#pragma once

// Bernoulli numbers with B_1 = -1/2, i.e. the coefficients of t / (e^t - 1).

#include <mutex>
#include <vector>

#include "shintani/exactnum/rat.hpp"

namespace shintani {

namespace detail {

struct BernoulliTable {
  std::mutex mutex;
  std::vector<Rat> values{Rat(1)};
};

inline BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

}  // namespace detail

/// B_m, extending the shared cache through sum_{j<=m} C(m+1, j) B_j = 0.
inline Rat bernoulli_number(unsigned m) {
  auto& t = detail::bernoulli_table();
  std::lock_guard lock(t.mutex);
  while (t.values.size() <= m) {
    const unsigned k = static_cast<unsigned>(t.values.size());
    if (k >= 3 && k % 2 == 1) {
      t.values.emplace_back(0);
      continue;
    }
    Rat s = 0;
    for (unsigned j = 0; j < k; ++j) s += Rat(binomial(k + 1, j)) * t.values[j];
    t.values.emplace_back(-s / Rat(k + 1));
  }
  return t.values[m];
}

/// B_m(x) = sum_j C(m, j) B_j x^(m-j).
inline Rat bernoulli_poly(unsigned m, const Rat& x) {
  Rat acc = 0;
  Rat xp = 1;  // x^(m-j), built from j = m downwards
  for (unsigned j = m + 1; j-- > 0;) {
    acc += Rat(binomial(m, j)) * bernoulli_number(j) * xp;
    xp *= x;
  }
  return acc;
}

}  // namespace shintani
