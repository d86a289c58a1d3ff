#include <gtest/gtest.h>

#include "shintani/cone/decompose.hpp"
#include "shintani/pairing/pair.hpp"
#include "shintani/random.hpp"
#include "support.hpp"

using namespace shintani;
using namespace shintani::fixtures;

namespace {

QVec q(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Rat coeff(const Series& s, std::initializer_list<unsigned> e) { return s.coeff(Monomial(e)).to_rat(); }

}  // namespace

TEST(Series, DivisionByLinearForm) {
  LinForm l = to_form(q({1, 2}));
  Series a = exp_series(to_form(q({1, -1})), 5);
  Series prod = Series::mul_truncated(a, linear_series(l), 6);
  EXPECT_EQ(divide_by_form(prod, l, 6), a.truncated(5));
  EXPECT_THROW(divide_by_form(a, l, 5), Error);
  try {
    divide_by_form(a, l, 5);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_divisible);
  }
}

TEST(Series, SubstitutionIsARingMap) {
  Series a = exp_series(to_form(q({1, 2})), 4), b = bernoulli_g_series(to_form(q({3, -1})), 4);
  std::vector<LinForm> t{to_form(q({1, 1})), to_form(q({2, -1}))};
  EXPECT_EQ(substitute_linear(Series::mul_truncated(a, b, 4), t),
            Series::mul_truncated(substitute_linear(a, t), substitute_linear(b, t), 4));
  // exp((1,2).z) at z = T x is exp((T^t (1,2)).x) = exp((5,-1).x)
  EXPECT_EQ(substitute_linear(a, t), exp_series(to_form(q({5, -1})), 4));
}

TEST(PhiMap, Examples) {
  QuotSeries s = phi_map({{q({1}), CoeffElem(1)}}, 1, 6);
  for (unsigned m = 0; m <= 6; ++m) EXPECT_EQ(coeff(s.numerator(), {m}), Rat(1) / Rat(factorial(m)));
  QuotSeries even = phi_map({{q({2, 1}), CoeffElem(1)}, {q({-2, -1}), CoeffElem(1)}}, 2, 7);
  for (const auto& [m, c] : even.numerator().terms()) EXPECT_EQ(m.total_degree() % 2, 0u);
  EXPECT_FALSE(even.is_zero());
}

TEST(PhiMap, TranslationCompatibility) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = trial % 2 + 1;
    FiniteSupportFn a;
    for (int k = 0; k < 3; ++k) a[random_vector(rng, n, 3, 2)] += CoeffElem(Rat(uniform_int(rng, -3, 3)));
    QVec v = random_vector(rng, n, 3, 2);
    const int dmax = 5;
    QuotSeries lhs = phi_map(translate(a, v), n, dmax);
    QuotSeries rhs = phi_map(a, n, dmax).times(exp_series(to_form(v), dmax), dmax);
    EXPECT_TRUE(same_expansion(lhs, rhs));
  }
}

TEST(Parallelotope, Examples) {
  EXPECT_EQ(parallelotope_points({q({2})}, 1), (std::vector<QVec>{q({1}), q({2})}));
  EXPECT_EQ(parallelotope_points({q({1, 0}), q({0, 1})}, 1), (std::vector<QVec>{q({1, 1})}));
  // a(1,0) + b(1,2) = (x,y): b = y/2, a = x - y/2, both in (0,1]
  EXPECT_EQ(parallelotope_points({q({1, 0}), q({1, 2})}, 1), (std::vector<QVec>{q({1, 1}), q({2, 2})}));
  EXPECT_EQ(parallelotope_points({q({1, 1})}, 2), (std::vector<QVec>{{make_rat(1, 2), make_rat(1, 2)}, q({1, 1})}));
}

TEST(Parallelotope, CountIsCovolume) {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<QVec> g{random_vector(rng, 2, 3, 1), random_vector(rng, 2, 3, 1)};
    Rat det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if (det == 0) continue;
    long d = uniform_int(rng, 1, 3);
    EXPECT_EQ(Rat(static_cast<long>(parallelotope_points(g, d).size())), abs(det) * d * d);
  }
}

TEST(PairCone, IndicatorOfIntegers) {
  SchwartzFn one = SchwartzFn::indicator(1);
  QuotSeries p = pair_cone(OpenSimplicialCone({q({1})}), one, 6);
  ASSERT_EQ(p.denominators().size(), 1u);
  // -(1/z) sum B_m(1) z^m / m!
  for (unsigned m = 0; m <= 7; ++m)
    EXPECT_EQ(coeff(p.numerator(), {m}), -bernoulli_poly(m, 1) / Rat(factorial(m)));
  EXPECT_EQ(coeff(p.numerator(), {0}), -1);
  EXPECT_EQ(coeff(p.numerator(), {1}), make_rat(-1, 2));
  EXPECT_EQ(coeff(p.numerator(), {2}), make_rat(-1, 12));
  EXPECT_EQ(coeff(p.numerator(), {3}), 0);
  EXPECT_EQ(coeff(p.numerator(), {4}), make_rat(1, 720));
  EXPECT_EQ(laurent_coefficient(p, {1}), make_rat(-1, 12));
  EXPECT_THROW(reduce_to_power_series(p), Error);
  EXPECT_THROW(laurent_coefficient(p, {7}), Error);
}

TEST(PairCone, QuadraticCharacterModThree) {
  SchwartzFn chi(1, 1, 3);
  chi.set({1}, CoeffElem(1));
  chi.set({2}, CoeffElem(-1));
  QuotSeries p = pair_cone(OpenSimplicialCone({q({1})}), chi, 6);
  EXPECT_EQ(coeff(p.numerator(), {0}), 0);
  Series s = reduce_to_power_series(p);
  EXPECT_EQ(coeff(s, {0}), make_rat(1, 3));
  EXPECT_EQ(laurent_coefficient(p, {0}), make_rat(1, 3));
  EXPECT_EQ(reduce_to_power_series(QuotSeries(Series::mul_truncated(s, linear_series(to_form(q({3}))), 6),
                                              {to_form(q({3}))}, 6)),
            s.truncated(5));
}

TEST(PairCone, DefiningIdentity) {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = trial % 2 + 1;
    OpenSimplicialCone c = random_cone(rng, n);
    SchwartzFn phi = random_schwartz(rng, n, false);
    const int dmax = 4;
    QuotSeries p = pair_cone(c, phi, dmax);
    auto gens = period_generators(c, phi);
    Series back = reduce_to_power_series(p.times(one_minus_exp_product(gens, dmax + 8), dmax + 8));
    Series direct = parallelotope_sum(parallelotope_points(gens, phi.support_denominator()), phi, dmax);
    EXPECT_EQ(back.truncated(dmax), direct) << c.describe();
  }
}

TEST(PairCone, ScalingRobustness) {
  Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = trial % 2 + 1;
    OpenSimplicialCone c = random_cone(rng, n);
    SchwartzFn phi = random_schwartz(rng, n, false);
    std::vector<long> extra;
    for (std::size_t i = 0; i < c.dim(); ++i) extra.push_back(uniform_int(rng, 2, 3));
    EXPECT_TRUE(same_expansion(pair_cone(c, phi, 4), pair_cone(c, phi, 4, extra))) << c.describe();
  }
}

TEST(PairCone, Bilinearity) {
  Rng rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = trial % 2 + 1;
    OpenSimplicialCone c = random_cone(rng, n);
    SchwartzFn a = random_schwartz(rng, n, false), b = random_schwartz(rng, n, false);
    EXPECT_TRUE(same_expansion(pair_cone(c, a + b, 3), pair_cone(c, a, 3) + pair_cone(c, b, 3)));
    ConeCombo half(n);
    half.add(make_rat(1, 2), c);
    EXPECT_TRUE(same_expansion(pair_combo(half, a, 3), pair_cone(c, a, 3).scaled(CoeffElem(make_rat(1, 2)))));
  }
}

TEST(PairCombo, ConstantFunctionsPairToZero) {
  Rng rng(46);
  auto all_space = [](std::size_t n, std::vector<QVec> forms) {
    return decompose_by_arrangement(n, std::move(forms), [](const QVec&) { return Rat(1); });
  };
  ConeCombo plane = all_space(2, {});
  EXPECT_EQ(plane.terms.size(), 8u);
  ConeCombo line = all_space(1, {});
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = trial % 2 + 1;
    SchwartzFn phi = random_schwartz(rng, n, true);
    std::vector<QVec> forms;
    if (n == 2)
      for (int k = 0; k < trial % 3; ++k) forms.push_back(random_nonzero_vector(rng, 2, 3, 1));
    ConeCombo c = n == 1 ? line : all_space(2, forms);
    EXPECT_TRUE(pair_combo(c, phi, 3).is_zero());
    ConeCombo with_constant = c;
    with_constant.constant = -1;
    EXPECT_TRUE(pair_combo(with_constant, phi, 3).is_zero());
  }
  SchwartzFn one = SchwartzFn::indicator(2);
  ConeCombo constant(2);
  constant.constant = 1;
  try {
    pair_combo(constant, one, 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::constant_against_non_vanishing);
  }
}

TEST(PairCombo, CocycleFacesPairToZero) {
  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    auto tuple = random_tuple(rng, 2, 3, static_cast<Degeneracy>(uniform_int(rng, 0, 4)));
    SchwartzFn phi = random_schwartz(rng, 2, true);
    QuotSeries sum = QuotSeries::power_series(Series(2), 3);
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<QMat> rest;
      for (std::size_t j = 0; j < 3; ++j)
        if (j != i) rest.push_back(tuple[j]);
      QuotSeries p = pair_combo(sigma_decompose(rest), phi, 3);
      sum = i % 2 == 0 ? sum + p : sum - p;
    }
    EXPECT_TRUE(sum.is_zero());
  }
}

TEST(PairCombo, DeterministicAcrossScheduling) {
  Rng rng(48);
  auto tuple = random_tuple(rng, 2, 2, Degeneracy::none);
  ConeCombo c = sigma_decompose(tuple);
  SchwartzFn phi = random_schwartz(rng, 2, false);
  QuotSeries a = pair_combo(c, phi, 3, true), b = pair_combo(c, phi, 3, false);
  EXPECT_EQ(a.numerator(), b.numerator());
  EXPECT_EQ(a.denominators(), b.denominators());
}

TEST(PairCombo, CyclotomicValues) {
  // Odd character mod 4 with values in Q(i) scaled by i: pairing is linear in i.
  auto ring = CoeffRing::get(4);
  CoeffElem i = CoeffElem::root_of_unity(ring, 1);
  SchwartzFn chi(1, 1, 4);
  chi.set({1}, CoeffElem(1));
  chi.set({3}, CoeffElem(-1));
  QuotSeries p = pair_cone(OpenSimplicialCone({q({1})}), chi, 4);
  QuotSeries pi = pair_cone(OpenSimplicialCone({q({1})}), chi.scaled(i), 4);
  EXPECT_TRUE(same_expansion(pi, p.scaled(i)));
  EXPECT_EQ(laurent_coefficient(p, {0}), make_rat(1, 2));
  EXPECT_EQ(laurent_coefficient(pi, {0}), i.scaled(make_rat(1, 2)));
}

TEST(Laurent, OrderAverageOnSimplePole) {
  // (z1 + 2 z2)^2 / (z1 + z2) = z1 + 3 z2 + z2^2 / (z1 + z2). The last term
  // contributes nothing to degree one when z1 dominates and z2 - z1 when z2
  // dominates.
  Series num = Series::mul_truncated(linear_series(to_form(q({1, 2}))), linear_series(to_form(q({1, 2}))), 2);
  QuotSeries x(num, {to_form(q({1, 1}))}, 2);
  EXPECT_EQ(laurent_coefficient(x, {1, 0}).to_rat(), make_rat(1, 2));
  EXPECT_EQ(laurent_coefficient(x, {0, 1}).to_rat(), make_rat(7, 2));
  // A denominator in one variable only has no ambiguity.
  QuotSeries y(Series::mul_truncated(num, linear_series(to_form(q({0, 1}))), 3), {to_form(q({0, 1}))}, 3);
  EXPECT_EQ(laurent_coefficient(y, {1, 1}).to_rat(), 4);
}
