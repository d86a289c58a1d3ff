#pragma once

// Seeded random instances. Integers are drawn by plain modulo reduction of
// mt19937_64 output, so streams are identical on every platform (the standard
// distributions are implementation-defined).

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "shintani/ordered_field/linalg.hpp"

namespace shintani {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

/// Numerator in [lo, hi], denominator in [1, max_den].
inline Rat random_rat(Rng& rng, long lo, long hi, long max_den) {
  return make_rat(uniform_int(rng, lo, hi), uniform_int(rng, 1, max_den));
}

inline QVec random_vector(Rng& rng, std::size_t n, long bound = 5, long max_den = 3) {
  QVec v(n);
  for (auto& x : v) x = random_rat(rng, -bound, bound, max_den);
  return v;
}

inline QVec random_nonzero_vector(Rng& rng, std::size_t n, long bound = 5, long max_den = 3) {
  for (;;) {
    QVec v = random_vector(rng, n, bound, max_den);
    if (!is_zero_vector(v)) return v;
  }
}

/// Invertible matrix with entries in {-3..3}/{1..3}.
inline QMat random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    QMat a(n, QVec(n));
    for (auto& row : a)
      for (auto& x : row) x = random_rat(rng, -3, 3, 3);
    if (determinant(a) != 0) return a;
  }
}

/// Invertible matrix whose first column is the given nonzero vector.
inline QMat random_invertible_with_first_column(Rng& rng, const QVec& first) {
  const std::size_t n = first.size();
  for (;;) {
    QMat a(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i) {
      a[i][0] = first[i];
      for (std::size_t j = 1; j < n; ++j) a[i][j] = random_rat(rng, -3, 3, 3);
    }
    if (determinant(a) != 0) return a;
  }
}

enum class Degeneracy { none, repeated, parallel_first_columns, low_rank_first_columns, integer_unimodular };

/// A tuple of `count` invertible n x n matrices. Degenerate families: a matrix
/// repeated; all first columns parallel; all first columns inside a
/// hyperplane; small integer matrices, which often share eigenvectors.
inline std::vector<QMat> random_tuple(Rng& rng, std::size_t n, std::size_t count, Degeneracy kind) {
  std::vector<QMat> t;
  // Repetition needs two matrices and a proper subspace needs n >= 2.
  if ((kind == Degeneracy::repeated && count < 2) || (kind == Degeneracy::low_rank_first_columns && n < 2))
    kind = Degeneracy::none;
  switch (kind) {
    case Degeneracy::none:
      for (std::size_t i = 0; i < count; ++i) t.push_back(random_invertible(rng, n));
      break;
    case Degeneracy::repeated: {
      for (std::size_t i = 0; i < count; ++i) t.push_back(random_invertible(rng, n));
      std::size_t i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(count) - 1));
      std::size_t j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(count) - 2));
      if (j >= i) ++j;
      t[j] = t[i];
      break;
    }
    case Degeneracy::parallel_first_columns: {
      QVec u = random_nonzero_vector(rng, n, 3, 1);
      for (std::size_t i = 0; i < count; ++i) {
        QVec col = u;
        Rat s = random_rat(rng, 1, 3, 2);
        if (uniform_int(rng, 0, 1)) s = -s;
        for (auto& x : col) x *= s;
        t.push_back(random_invertible_with_first_column(rng, col));
      }
      break;
    }
    case Degeneracy::low_rank_first_columns: {
      // First columns inside the span of n - 1 fixed vectors.
      std::vector<QVec> span;
      for (std::size_t k = 0; k + 1 < n; ++k) span.push_back(random_nonzero_vector(rng, n, 3, 1));
      for (std::size_t i = 0; i < count; ++i) {
        QVec col(n);
        do {
          col.assign(n, Rat(0));
          for (const auto& s : span) {
            Rat c = uniform_int(rng, -2, 2);
            for (std::size_t r = 0; r < n; ++r) col[r] += c * s[r];
          }
        } while (is_zero_vector(col));
        t.push_back(random_invertible_with_first_column(rng, col));
      }
      break;
    }
    case Degeneracy::integer_unimodular:
      for (std::size_t i = 0; i < count; ++i) {
        for (;;) {
          QMat a(n, QVec(n));
          for (auto& row : a)
            for (auto& x : row) x = uniform_int(rng, -1, 1);
          Rat d = determinant(a);
          if (d == 1 || d == -1) {
            t.push_back(a);
            break;
          }
        }
      }
      break;
  }
  return t;
}

/// Point w != 0. Half of the time it is placed on a special line or plane of
/// the tuple: a multiple of some first column, a coordinate hyperplane, or a
/// combination of two first columns.
inline QVec random_point_for(Rng& rng, const std::vector<QMat>& tuple, std::size_t n) {
  for (;;) {
    QVec w(n);
    switch (uniform_int(rng, 0, 5)) {
      case 0: {
        const auto& a = tuple[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(tuple.size()) - 1))];
        Rat s = random_rat(rng, -3, 3, 2);
        for (std::size_t r = 0; r < n; ++r) w[r] = a[r][0] * s;
        break;
      }
      case 1: {
        w = random_vector(rng, n, 4, 2);
        w[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1))] = 0;
        break;
      }
      case 2: {
        const auto& a = tuple[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(tuple.size()) - 1))];
        const auto& b = tuple[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(tuple.size()) - 1))];
        Rat s = uniform_int(rng, -2, 2), t = uniform_int(rng, -2, 2);
        for (std::size_t r = 0; r < n; ++r) w[r] = a[r][0] * s + b[r][0] * t;
        break;
      }
      default:
        w = random_vector(rng, n, 5, 3);
    }
    if (!is_zero_vector(w)) return w;
  }
}

/// n + 1 vectors in dimension n with every n-subset independent.
inline std::vector<QVec> random_general_position(Rng& rng, std::size_t n, std::size_t count) {
  for (;;) {
    std::vector<QVec> v;
    for (std::size_t i = 0; i < count; ++i) v.push_back(random_vector(rng, n, 5, 3));
    bool ok = true;
    // Every n-subset of `count` vectors must have nonzero determinant.
    std::vector<std::size_t> idx(n);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
      if (!ok) return;
      if (depth == n) {
        QMat m(n, QVec(n));
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t r = 0; r < n; ++r) m[r][c] = v[idx[c]][r];
        if (determinant(m) == 0) ok = false;
        return;
      }
      for (std::size_t i = start; i < count; ++i) {
        idx[depth] = i;
        rec(i + 1, depth + 1);
      }
    };
    rec(0, 0);
    if (ok) return v;
  }
}

}  // namespace shintani
