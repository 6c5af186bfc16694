// Copyright 2026 The aphi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aphi/group_space.hpp"

#include <gtest/gtest.h>

#include "aphi/errors.hpp"
#include "aphi/group_function.hpp"
#include "aphi/random.hpp"

namespace aphi {
namespace {

// (f*g)(x) = sum_y f(y) g(y^-1 x) lambda(y), summed straight from the
// multiplication table.
GroupFunction direct_convolution(const GroupFunction& f, const GroupFunction& g) {
  const GroupSpace& s = f.space();
  GroupFunction out(f.space_ptr());
  for (std::size_t x = 0; x < s.size(); ++x) {
    Complex sum{};
    for (std::size_t y = 0; y < s.size(); ++y) {
      const auto z = s.mul(s.inv(y), x);
      if (z) sum += f[y] * g[*z] * s.weight_value(y);
    }
    out[x] = sum;
  }
  return out;
}

GroupFunction random_function(const SpacePtr& sp, Rng& rng) {
  GroupFunction f(sp);
  for (std::size_t x = 0; x < sp->size(); ++x) {
    f[x] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  }
  return f;
}

std::vector<SpacePtr> finite_groups() {
  return {GroupSpace::cyclic(1), GroupSpace::cyclic(2), GroupSpace::cyclic(5),
          GroupSpace::cyclic(6), GroupSpace::symmetric(3),
          GroupSpace::product({GroupSpace::cyclic(2), GroupSpace::cyclic(2)}),
          GroupSpace::product({GroupSpace::cyclic(2), GroupSpace::cyclic(3), GroupSpace::cyclic(2)})};
}

TEST(GroupSpace, AxiomsHoldForBuiltins) {
  for (const SpacePtr& g : finite_groups()) {
    const AxiomReport r = check_group_axioms(*g);
    EXPECT_TRUE(r.pass) << g->describe() << ": " << r.detail;
    EXPECT_TRUE(r.exhaustive);
  }
  EXPECT_TRUE(check_group_axioms(*GroupSpace::window(20)).pass);
}

TEST(GroupSpace, NormalizedWeightsSumToOneExactly) {
  for (const SpacePtr& g : finite_groups()) {
    const Rational total = g->total_measure();
    EXPECT_EQ(total.num, total.den) << g->describe();
    EXPECT_EQ(g->weight(0), (Rational{1, static_cast<std::int64_t>(g->size())}));
  }
  EXPECT_THROW(GroupSpace::window(3)->total_measure(), ScopeError);
}

TEST(GroupSpace, WindowProductsLeavingTheWindowAreFlagged) {
  const SpacePtr w = GroupSpace::window(3);
  EXPECT_FALSE(w->mul(*w->window_index(2), *w->window_index(2)).has_value());
  EXPECT_EQ(w->integer_at(*w->mul(*w->window_index(2), *w->window_index(-3))), -1);
  const GroupFunction edge = GroupFunction::point(w, *w->window_index(3));
  EXPECT_TRUE(convolve(edge, edge).truncated);
  const GroupFunction mid = GroupFunction::point(w, *w->window_index(1));
  EXPECT_FALSE(convolve(mid, mid).truncated);
}

TEST(GroupSpace, TableValidation) {
  // Not associative: a Latin square without a group structure.
  const std::vector<std::vector<std::size_t>> bad{{0, 1, 2, 3, 4},
                                                  {1, 0, 3, 4, 2},
                                                  {2, 4, 0, 1, 3},
                                                  {3, 2, 4, 0, 1},
                                                  {4, 3, 1, 2, 0}};
  EXPECT_THROW(GroupSpace::table({"e", "a", "b", "c", "d"}, bad, 0), DomainError);
  EXPECT_THROW(GroupSpace::table({"e", "a"}, {{0, 1}, {1, 1}}, 0), DomainError);
  EXPECT_THROW(GroupSpace::table({"e", "a"}, {{0, 1}, {1, 2}}, 0), DomainError);
  EXPECT_NO_THROW(GroupSpace::table({"e", "a"}, {{0, 1}, {1, 0}}, 0));
}

TEST(GroupSpace, ProductsOfWindowsAreOutOfScope) {
  EXPECT_THROW(GroupSpace::product({GroupSpace::window(2), GroupSpace::cyclic(2)}), ScopeError);
}

TEST(GroupSpace, SymmetricGroupIsNonabelian) {
  const SpacePtr s3 = GroupSpace::symmetric(3);
  ASSERT_TRUE(s3->noncommuting_pair().has_value());
  const auto [a, b] = *s3->noncommuting_pair();
  EXPECT_NE(*s3->mul(a, b), *s3->mul(b, a));
  EXPECT_TRUE(GroupSpace::cyclic(6)->is_abelian());
}

TEST(Convolve, PointMassesOnZ4) {
  const SpacePtr z4 = GroupSpace::cyclic(4);
  const GroupFunction chi0 = GroupFunction::point(z4, 0);
  const GroupFunction c = convolve(chi0, chi0).function;
  EXPECT_DOUBLE_EQ(c[0].real(), 0.25);
  for (std::size_t x = 1; x < 4; ++x) EXPECT_EQ(c[x], Complex(0.0));
  EXPECT_LE(c.max_abs_diff(direct_convolution(chi0, chi0)), 1e-15);
}

TEST(Convolve, ConstantOneGivesMeanEverywhere) {
  Rng rng(3);
  for (const SpacePtr& g : finite_groups()) {
    const GroupFunction h = random_function(g, rng);
    Complex mean{};
    for (std::size_t x = 0; x < g->size(); ++x) mean += h[x] * g->weight_value(x);
    const GroupFunction c = convolve(GroupFunction::constant(g, 1.0), h).function;
    for (std::size_t x = 0; x < g->size(); ++x) EXPECT_LE(std::abs(c[x] - mean), 1e-14);
  }
}

TEST(Convolve, MatchesDirectSummation) {
  Rng rng(5);
  for (const SpacePtr& g : finite_groups()) {
    const GroupFunction f = random_function(g, rng), h = random_function(g, rng);
    EXPECT_LE(convolve(f, h).function.max_abs_diff(direct_convolution(f, h)), 1e-14) << g->describe();
  }
  const SpacePtr w = GroupSpace::window(12);
  GroupFunction f(w), h(w);
  for (int x = -4; x <= 4; ++x) {
    f[*w->window_index(x)] = rng.uniform(-1, 1);
    h[*w->window_index(x)] = rng.uniform(-1, 1);
  }
  EXPECT_LE(convolve(f, h).function.max_abs_diff(direct_convolution(f, h)), 1e-14);
}

TEST(Convolve, CommutativeOnAbelianGroups) {
  Rng rng(7);
  const SpacePtr z6 = GroupSpace::cyclic(6);
  for (int i = 0; i < 50; ++i) {
    const GroupFunction f = random_function(z6, rng), h = random_function(z6, rng);
    EXPECT_LE(convolve(f, h).function.max_abs_diff(convolve(h, f).function), 1e-12);
  }
}

TEST(Convolve, AssociativeOnZ6AndS3) {
  Rng rng(9);
  for (const SpacePtr& g : {GroupSpace::cyclic(6), GroupSpace::symmetric(3)}) {
    for (int i = 0; i < 50; ++i) {
      const GroupFunction a = random_function(g, rng), b = random_function(g, rng),
                          c = random_function(g, rng);
      const GroupFunction l = convolve(convolve(a, b).function, c).function;
      const GroupFunction r = convolve(a, convolve(b, c).function).function;
      ASSERT_LE(l.max_abs_diff(r), 1e-10) << g->describe();
    }
  }
}

TEST(Convolve, LeftTranslationCommutes) {
  Rng rng(13);
  for (const SpacePtr& g : finite_groups()) {
    const GroupFunction f = random_function(g, rng), h = random_function(g, rng);
    for (std::size_t t = 0; t < g->size(); ++t) {
      const GroupFunction lhs = translate_left(t, convolve(f, h).function).function;
      const GroupFunction rhs = convolve(translate_left(t, f).function, h).function;
      ASSERT_LE(lhs.max_abs_diff(rhs), 1e-12) << g->describe();
    }
  }
}

TEST(Convolve, CheckInvolutionIdentity) {
  Rng rng(15);
  for (const SpacePtr& g : {GroupSpace::cyclic(6), GroupSpace::cyclic(5)}) {
    const GroupFunction f = random_function(g, rng), h = random_function(g, rng);
    const GroupFunction lhs = check(convolve(f, check(h)).function);
    const GroupFunction rhs = convolve(h, check(f)).function;
    EXPECT_LE(lhs.max_abs_diff(rhs), 1e-12);
  }
}

TEST(Convolve, MismatchedSpacesRejected) {
  const GroupFunction a = GroupFunction::point(GroupSpace::cyclic(4), 0);
  const GroupFunction b = GroupFunction::point(GroupSpace::cyclic(5), 0);
  EXPECT_THROW(convolve(a, b), DomainError);
  EXPECT_THROW(a + b, DomainError);
}

TEST(Check, Examples) {
  const SpacePtr z6 = GroupSpace::cyclic(6);
  EXPECT_EQ(check(GroupFunction::point(z6, 2))[4], Complex(1.0));
  Rng rng(17);
  const GroupFunction f = random_function(z6, rng);
  const GroupFunction c = check(f);
  for (std::size_t x = 0; x < 6; ++x) EXPECT_EQ(c[x], f[(6 - x) % 6]);
  EXPECT_EQ(check(c).max_abs_diff(f), 0.0);
  const GroupFunction sym = GroupFunction::indicator(z6, {0, 1, 5});
  EXPECT_EQ(check(sym).max_abs_diff(sym), 0.0);
}

TEST(Translate, ExhaustiveOnZ5) {
  const SpacePtr z5 = GroupSpace::cyclic(5);
  Rng rng(19);
  const GroupFunction f = random_function(z5, rng);
  EXPECT_EQ(translate_left(z5->identity(), f).function.max_abs_diff(f), 0.0);
  for (std::size_t s = 0; s < 5; ++s) {
    for (std::size_t t = 0; t < 5; ++t) {
      const GroupFunction a = translate_left(s, translate_left(t, f).function).function;
      EXPECT_EQ(a.max_abs_diff(translate_left(*z5->mul(s, t), f).function), 0.0);
      const GroupFunction lr = translate_left(s, translate_right(t, f).function).function;
      const GroupFunction rl = translate_right(t, translate_left(s, f).function).function;
      EXPECT_EQ(lr.max_abs_diff(rl), 0.0);
    }
  }
}

TEST(Translate, RightTranslationFormula) {
  const SpacePtr s3 = GroupSpace::symmetric(3);
  Rng rng(21);
  const GroupFunction f = random_function(s3, rng);
  for (std::size_t t = 0; t < 6; ++t) {
    const GroupFunction r = translate_right(t, f).function;
    for (std::size_t x = 0; x < 6; ++x) EXPECT_EQ(r[x], f[*s3->mul(x, t)]);
  }
}

TEST(Leptin, FiniteGroupsUseTheCarrier) {
  const SpacePtr g = GroupSpace::symmetric(3);
  const LeptinSet l = leptin_search(*g, {1, 2}, 0.25);
  EXPECT_EQ(l.set.size(), 6u);
  EXPECT_DOUBLE_EQ(l.ratio, 1.0);
}

TEST(Leptin, WindowIntervals) {
  const SpacePtr w = GroupSpace::window(300);
  const LeptinSet a = leptin_search(*w, w->interval(-1, 1), 0.5);
  EXPECT_EQ(a.half_width, 2);
  EXPECT_DOUBLE_EQ(a.ratio, 7.0 / 5.0);
  const LeptinSet b = leptin_search(*w, w->interval(-1, 1), 0.01);
  EXPECT_EQ(b.half_width, 100);
  EXPECT_DOUBLE_EQ(b.ratio, 203.0 / 201.0);
  EXPECT_GT(b.margin, 0.0);
}

TEST(Leptin, RandomSetsSatisfyTheStrictInequality) {
  Rng rng(23);
  const SpacePtr w = GroupSpace::window(2000);
  for (int i = 0; i < 40; ++i) {
    ElementSet k;
    for (int j = 0; j < 5; ++j) k.push_back(*w->window_index(static_cast<int>(rng.below(21)) - 10));
    const double eps = rng.uniform(0.05, 2.0);
    const LeptinSet l = leptin_search(*w, normalize_set(k), eps);
    EXPECT_LT(l.product_measure, (1.0 + eps) * l.measure);
    EXPECT_EQ(l.product_measure, w->measure(product_set(*w, normalize_set(k), l.set).set));
  }
}

TEST(Leptin, TooSmallWindowIsInfeasible) {
  const SpacePtr w = GroupSpace::window(20);
  EXPECT_THROW(leptin_search(*w, w->interval(-1, 1), 0.01), InfeasibleError);
  EXPECT_THROW(leptin_search(*w, {}, 0.5), DomainError);
}

TEST(GroupFunction, Validation) {
  const SpacePtr z3 = GroupSpace::cyclic(3);
  EXPECT_THROW(GroupFunction(z3, {1.0, 2.0}), DomainError);
  EXPECT_THROW(GroupFunction(z3, {1.0, 2.0, Complex(NAN, 0)}), DomainError);
  const GroupFunction f(z3, {1.0, Complex(0, -2), 0.0});
  EXPECT_DOUBLE_EQ(f.sup_norm(), 2.0);
  EXPECT_DOUBLE_EQ(f.l1_norm(), 1.0);
  EXPECT_EQ(f.support(), (ElementSet{0, 1}));
}

TEST(GroupSpace, ProductLabelsAndSets) {
  const SpacePtr g = GroupSpace::product({GroupSpace::cyclic(2), GroupSpace::cyclic(3)});
  EXPECT_EQ(g->size(), 6u);
  EXPECT_TRUE(g->find("(1,2)").has_value());
  EXPECT_EQ(g->describe(), "Z2xZ3");
}

}  // namespace
}  // namespace aphi
