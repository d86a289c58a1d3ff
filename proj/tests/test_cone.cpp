#include <gtest/gtest.h>

#include "shintani/cone/decompose.hpp"
#include "shintani/random.hpp"

using namespace shintani;

namespace {

QVec q(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

QMat m2(long a, long b, long c, long d) { return {q({a, b}), q({c, d})}; }

// Random points plus points on every cell of the arrangement the combination
// was built from: cell witnesses and sums of pairs of rays.
std::vector<QVec> sample_points(Rng& rng, const std::vector<QMat>& tuple, std::size_t count) {
  const std::size_t n = tuple.size();
  SigmaForms s(tuple);
  std::vector<QVec> forms = sigma_forms(s);
  for (std::size_t k = 0; k < n; ++k) {
    QVec e(n);
    e[k] = 1;
    forms.push_back(e);
  }
  Arrangement arr(n, forms);
  std::vector<QVec> pts;
  std::vector<QVec> rays;
  for (const auto& c : arr.cells()) {
    pts.push_back(c.witness);
    if (c.dim == 1) rays.push_back(c.witness);
  }
  while (pts.size() < count) {
    if (uniform_int(rng, 0, 1) == 0 && rays.size() >= 2) {
      const auto& a = rays[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(rays.size()) - 1))];
      const auto& b = rays[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(rays.size()) - 1))];
      QVec w(n);
      Rat x = uniform_int(rng, 0, 3), y = uniform_int(rng, 0, 3);
      for (std::size_t r = 0; r < n; ++r) w[r] = x * a[r] + y * b[r];
      if (!is_zero_vector(w)) pts.push_back(w);
    } else {
      pts.push_back(random_point_for(rng, tuple, n));
    }
  }
  return pts;
}

}  // namespace

TEST(Cone, MembershipAndErrors) {
  OpenSimplicialCone c({q({1, 0}), q({0, 1})});
  EXPECT_TRUE(c.contains(q({1, 1})));
  EXPECT_FALSE(c.contains(q({1, 0})));
  OpenSimplicialCone ray({q({2, 0, 0})});
  EXPECT_TRUE(ray.contains(q({5, 0, 0})));
  EXPECT_FALSE(ray.contains(q({5, 1, 0})));
  EXPECT_FALSE(ray.contains(q({-5, 0, 0})));
  EXPECT_THROW(OpenSimplicialCone({q({1, 1}), q({2, 2})}), Error);
  EXPECT_THROW(OpenSimplicialCone({q({0, 0})}), Error);
}

TEST(ConeCombo, SpecExamples) {
  ConeCombo a(2);
  a.add(1, OpenSimplicialCone({q({1, 0}), q({0, 1})}));
  EXPECT_EQ(combo_eval(a, q({1, 1})), 1);
  ConeCombo b = a;
  b.add(-1, OpenSimplicialCone({q({1, 0})}));
  EXPECT_EQ(combo_eval(b, q({1, 0})), -1);
  ConeCombo c(2);
  c.add(make_rat(1, 2), OpenSimplicialCone({q({1, 0})}));
  EXPECT_EQ(combo_eval(c, q({2, 0})), make_rat(1, 2));
  EXPECT_THROW(combo_eval(c, q({0, 0})), Error);
}

TEST(ConeCombo, Action) {
  ConeCombo a(2);
  a.add(1, OpenSimplicialCone({q({1, 0}), q({0, 1})}));
  Rng rng(1);
  for (int k = 0; k < 20; ++k) {
    QVec w = random_nonzero_vector(rng, 2);
    EXPECT_EQ(combo_eval(act(identity_matrix(2), a), w), combo_eval(a, w));
  }
  EXPECT_EQ(combo_eval(act(m2(1, 0, 0, -1), a), q({1, -1})), -1);
  for (int trial = 0; trial < 50; ++trial) {
    QMat x = random_invertible(rng, 2), y = random_invertible(rng, 2);
    ConeCombo lhs = act(matmul(x, y), a), rhs = act(x, act(y, a));
    for (int k = 0; k < 10; ++k) {
      QVec w = random_nonzero_vector(rng, 2);
      EXPECT_EQ(combo_eval(lhs, w), combo_eval(rhs, w));
      EXPECT_EQ(combo_eval(lhs, w), sgn(determinant(matmul(x, y))) * combo_eval(a, solve(matmul(x, y), w)));
    }
  }
  EXPECT_THROW(act(m2(1, 1, 1, 1), a), Error);
}

TEST(FindPoint, FeasibilityAndWitness) {
  auto w = find_point(2, {}, {q({1, 0}), q({0, 1}), q({-1, 1})});
  ASSERT_TRUE(w);
  EXPECT_GT((*w)[0], 0);
  EXPECT_GT((*w)[1], (*w)[0]);
  EXPECT_FALSE(find_point(2, {}, {q({1, 0}), q({-1, 0})}));
  EXPECT_FALSE(find_point(3, {q({1, 1, 1})}, {q({1, 0, 0}), q({0, 1, 0}), q({0, 0, 1})}));
  auto r = find_point(3, {q({1, 1, 1}), q({1, -1, 0})}, {q({0, 0, 1})});
  ASSERT_TRUE(r);
  EXPECT_EQ(primitive_direction(*r), q({-1, -1, 2}));
}

TEST(Arrangement, CellCountsOfCoordinateArrangement) {
  Arrangement a2(2, {q({1, 0}), q({0, 1})});
  EXPECT_EQ(a2.cells().size(), 8u);  // 4 quadrants and 4 rays
  Arrangement a3(3, {q({1, 0, 0}), q({0, 1, 0}), q({0, 0, 1})});
  EXPECT_EQ(a3.cells().size(), 26u);
  Arrangement gen(3, {q({1, 0, 0}), q({0, 1, 0}), q({0, 0, 1}), q({1, 1, 1}), q({1, -2, 0})});
  for (const auto& c : gen.cells()) EXPECT_EQ(gen.signs_at(c.witness), c.signs);
}

TEST(SigmaDecompose, SpecExamples) {
  ConeCombo c = sigma_decompose({identity_matrix(2), m2(1, 0, 0, -1)});
  EXPECT_EQ(combo_eval(c, q({3, 0})), -1);
  EXPECT_EQ(combo_eval(c, q({3, 1})), 0);
  EXPECT_EQ(combo_eval(c, q({-3, 0})), 0);
  ConeCombo d = sigma_decompose({identity_matrix(2), m2(-1, 0, 0, 1)});
  for (auto w : {q({0, 1}), q({5, 1}), q({-5, 1})}) EXPECT_EQ(combo_eval(d, w), 1);
  for (auto w : {q({1, 0}), q({-1, 0}), q({3, -1})}) EXPECT_EQ(combo_eval(d, w), 0);
  ConeCombo e = sigma_decompose({QMat{q({1})}});
  ASSERT_EQ(e.terms.size(), 1u);
  EXPECT_EQ(e.terms[0].coeff, 1);
  EXPECT_EQ(e.terms[0].cone.generators()[0], q({1}));
  EXPECT_THROW(sigma_decompose(std::vector<QMat>(4, identity_matrix(4))), Error);
  EXPECT_THROW(sigma_decompose({identity_matrix(2), m2(1, 2, 2, 4)}), Error);
}

TEST(SigmaDecompose, ExtensionalAgreement) {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = trial < 20 ? 2 : 3;
    auto tuple = random_tuple(rng, n, n, static_cast<Degeneracy>(uniform_int(rng, 0, 4)));
    ConeCombo c = sigma_decompose(tuple);
    SigmaForms s(tuple);
    auto pts = sample_points(rng, tuple, 200);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      Rat v = combo_eval(c, pts[k]);
      EXPECT_EQ(v, s(pts[k])) << to_string(pts[k]);
      EXPECT_TRUE(v == 0 || v == 1 || v == -1);
      if (k % 10 == 0) {
        EXPECT_EQ(v, sigma_eval(tuple, pts[k]));
      }
    }
  }
}

TEST(SigmaDecompose, EquivarianceAndCocycle) {
  Rng rng(32);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2;
    auto tuple = random_tuple(rng, n, n + 1, static_cast<Degeneracy>(uniform_int(rng, 0, 4)));
    std::vector<ConeCombo> faces;
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<QMat> rest;
      for (std::size_t j = 0; j <= n; ++j)
        if (j != i) rest.push_back(tuple[j]);
      faces.push_back(sigma_decompose(rest));
    }
    int tau = tau_cocycle(tuple);
    QMat beta = random_invertible(rng, n);
    std::vector<QMat> moved{matmul(beta, tuple[0]), matmul(beta, tuple[1])};
    ConeCombo cm = sigma_decompose(moved);
    for (int k = 0; k < 40; ++k) {
      QVec w = random_point_for(rng, tuple, n);
      Rat alt = 0;
      for (std::size_t i = 0; i <= n; ++i) alt += (i % 2 == 0 ? 1 : -1) * combo_eval(faces[i], w);
      EXPECT_EQ(alt, tau);
      EXPECT_EQ(combo_eval(cm, w), sgn(determinant(beta)) * combo_eval(faces[2], solve(beta, w)));
    }
  }
}

TEST(LexRegion, Examples) {
  Rng rng(33);
  ConeCombo half = lex_positive_region({{q({1, 0})}}, 2);
  ConeCombo upper = lex_positive_region({{q({0, 1}), q({1, 0})}}, 2);
  ConeCombo same = lex_positive_region({{q({1, 0}), q({-1, 0})}}, 2);
  for (int k = 0; k < 200; ++k) {
    QVec w = random_nonzero_vector(rng, 2, 3, 1);
    if (k % 3 == 0) w[static_cast<std::size_t>(k % 2)] = 0;
    if (is_zero_vector(w)) continue;
    EXPECT_EQ(combo_eval(half, w), sgn(w[0]) > 0 ? 1 : 0);
    EXPECT_EQ(combo_eval(upper, w), (sgn(w[1]) > 0 || (sgn(w[1]) == 0 && sgn(w[0]) > 0)) ? 1 : 0);
    EXPECT_EQ(combo_eval(same, w), sgn(w[0]) > 0 ? 1 : 0);
  }
  EXPECT_THROW(lex_positive_region({{q({0, 0})}}, 2), Error);
  EXPECT_THROW(lex_positive_region({}, 2), Error);
}

TEST(LexRegion, RandomThreeDimensional) {
  Rng rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    LexLinearForm f;
    for (int k = 0; k < 3; ++k) f.forms.push_back(random_vector(rng, 3, 2, 1));
    if (f.all_zero()) continue;
    ConeCombo c = lex_positive_region(f, 3);
    for (int k = 0; k < 100; ++k) {
      QVec w = random_nonzero_vector(rng, 3, 2, 1);
      EXPECT_EQ(combo_eval(c, w), f.sign_at(w) > 0 ? 1 : 0);
    }
  }
}
