#include <gtest/gtest.h>

#include <random>

#include "shintani/ordered_field/linalg.hpp"
#include "shintani/ordered_field/ordered_elem.hpp"

using namespace shintani;

namespace {

Rat small_rat(std::mt19937_64& rng) {
  return make_rat(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
}

MPoly random_poly(std::mt19937_64& rng, std::size_t nvars, bool nonzero) {
  for (;;) {
    MPoly p(nvars);
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      for (std::size_t i = 0; i < nvars; ++i) m[i] = static_cast<std::uint16_t>(rng() % 3);
      p.add_term(m, small_rat(rng));
    }
    if (!nonzero || !p.is_zero()) return p;
  }
}

OrderedElem random_elem(std::mt19937_64& rng, std::size_t nvars) {
  return OrderedElem(random_poly(rng, nvars, false), random_poly(rng, nvars, true));
}

OrderedElem eps(std::size_t nvars, std::size_t slot) { return OrderedElem::variable(nvars, slot); }
OrderedElem cst(std::size_t nvars, long v) { return OrderedElem::constant(nvars, Rat(v)); }

}  // namespace

TEST(LeadingTerm, SpecExamples) {
  MPoly e1 = MPoly::variable(2, 0), e2 = MPoly::variable(2, 1), one = MPoly::constant(2, Rat(1));
  auto [m1, c1] = leading_term(one - e1);
  EXPECT_EQ(m1, Monomial{});
  EXPECT_EQ(c1, 1);
  MPoly p = MPoly::monomial(2, Monomial{5, 0}, Rat(1)) - e2;
  auto [m2, c2] = leading_term(p);
  EXPECT_EQ(m2, (Monomial{5, 0}));
  EXPECT_EQ(c2, 1);
  auto [m3, c3] = leading_term(MPoly::monomial(2, Monomial{1, 1}, Rat(3)));
  EXPECT_EQ(m3, (Monomial{1, 1}));
  EXPECT_EQ(c3, 3);
  EXPECT_THROW(leading_term(MPoly(2)), Error);
}

TEST(OrderedElem, SignExamples) {
  EXPECT_EQ((eps(2, 1) - eps(2, 0)).sign(), -1);
  EXPECT_EQ(((cst(2, 1) - eps(2, 0)) / (cst(2, 1) + eps(2, 0))).sign(), 1);
  EXPECT_EQ(OrderedElem(2).sign(), 0);
}

TEST(OrderedElem, InfinitesimalComparisons) {
  EXPECT_EQ(compare(eps(2, 0), cst(2, 1)), -1);
  EXPECT_EQ(compare(eps(2, 0), cst(2, 0)), 1);
  OrderedElem p = cst(2, 1);
  for (int k = 1; k <= 5; ++k) {
    p *= eps(2, 0);
    EXPECT_EQ(compare(eps(2, 1), p), -1) << "k=" << k;
  }
  std::mt19937_64 rng(1);
  OrderedElem x = random_elem(rng, 2);
  EXPECT_TRUE((x + (-x)).is_zero());
  EXPECT_THROW(x / OrderedElem(2), Error);
}

TEST(OrderedElem, TotalOrderAndOrderAxioms) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    OrderedElem x = random_elem(rng, 3), y = random_elem(rng, 3), z = random_elem(rng, 3);
    int xy = compare(x, y);
    EXPECT_EQ(compare(y, x), -xy);
    EXPECT_EQ(xy == 0, x == y);
    if (xy > 0 && compare(y, z) > 0) {
      EXPECT_GT(compare(x, z), 0);
    }
    if (xy > 0) {
      EXPECT_GT(compare(x + z, y + z), 0);
      if (z.sign() > 0) {
        EXPECT_GT(compare(x * z, y * z), 0);
      }
    }
    EXPECT_EQ((x * y).sign(), x.sign() * y.sign());
  }
}

TEST(OrderedElem, RepresentationIndependence) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    MPoly num = random_poly(rng, 3, false), den = random_poly(rng, 3, true), d = random_poly(rng, 3, true);
    OrderedElem a(num, den), b(num * d, den * d);
    EXPECT_EQ(a.sign(), b.sign());
    EXPECT_EQ(a, b);
  }
}

TEST(Iota, SlotRenaming) {
  // Source has slots eps_1, eps_2; targets eps_0, eps_1, eps_2.
  MPoly e1 = MPoly::variable(2, 0);
  EXPECT_EQ(iota(0, e1), MPoly::variable(3, 1));
  EXPECT_EQ(iota(1, e1), MPoly::variable(3, 0));
  EXPECT_EQ(iota(2, MPoly::variable(2, 1)), MPoly::variable(3, 1));
  EXPECT_THROW(iota(3, e1), Error);
}

TEST(Iota, HomomorphismAndOrderPreserving) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    OrderedElem x = random_elem(rng, 2), y = random_elem(rng, 2);
    for (std::size_t i = 0; i <= 2; ++i) {
      EXPECT_EQ(iota(i, x).sign(), x.sign());
      EXPECT_EQ(iota(i, x * y), iota(i, x) * iota(i, y));
      EXPECT_EQ(iota(i, x + y), iota(i, x) + iota(i, y));
    }
  }
}

TEST(Linalg, DeterminantAgreesAcrossRings) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 4;
    QMat a(n, QVec(n));
    for (auto& row : a)
      for (auto& x : row) x = small_rat(rng);
    Rat d = determinant(a);
    Matrix<MPoly> p(n, Vec<MPoly>(n, MPoly(1)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p[i][j] = MPoly::constant(1, a[i][j]);
    EXPECT_EQ(determinant(p), MPoly::constant(1, d));
    if (d != 0) {
      EXPECT_EQ(matmul(a, inverse(a)), identity_matrix(n));
      EXPECT_EQ(determinant(inverse(a)), 1 / d);
    } else {
      EXPECT_THROW(inverse(a), Error);
      EXPECT_FALSE(kernel_basis(a, n).empty());
    }
  }
}

TEST(Linalg, KernelBasis) {
  QMat a{{Rat(1), Rat(2), Rat(3)}};
  auto k = kernel_basis(a, 3);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_EQ(dot(a[0], v), 0);
  EXPECT_EQ(rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}), 1u);
}
