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

#include "aphi/orlicz_norms.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "aphi/errors.hpp"
#include "aphi/random.hpp"
#include "oracles.hpp"

namespace aphi {
namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<SpacePtr> groups() {
  return {GroupSpace::cyclic(2), GroupSpace::cyclic(8), GroupSpace::cyclic(12),
          GroupSpace::symmetric(3), GroupSpace::window(10)};
}

GroupFunction random_function(const SpacePtr& sp, Rng& rng, double scale = 2.0) {
  GroupFunction f(sp);
  const std::size_t n = sp->is_window() ? 7 : sp->size();
  const std::size_t offset = sp->is_window() ? sp->size() / 2 - 3 : 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.below(5) == 0) continue;  // some zeros
    f[offset + i] = Complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale));
  }
  return f;
}

std::vector<double> abs_values(const GroupFunction& f) {
  std::vector<double> out;
  for (Complex z : f.values()) out.push_back(std::abs(z));
  return out;
}

std::vector<double> weights(const GroupSpace& s) {
  std::vector<double> out;
  for (std::size_t x = 0; x < s.size(); ++x) out.push_back(s.weight_value(x));
  return out;
}

TEST(Modular, Examples) {
  const NFunction quad = NFunction::power(2.0);
  const SpacePtr z8 = GroupSpace::cyclic(8);
  EXPECT_EQ(modular(quad, GroupFunction(z8)), 0.0);
  EXPECT_DOUBLE_EQ(modular(quad, GroupFunction::constant(z8, 1.0)), 0.5);
  GroupFunction f = GroupFunction::indicator(z8, {2, 5});
  f *= 2.0;
  EXPECT_DOUBLE_EQ(modular(quad, f), 0.5);
}

TEST(Modular, CapErrorNamesTheElement) {
  const NFunction c = NFunction::cosh();
  const SpacePtr z4 = GroupSpace::cyclic(4);
  GroupFunction f(z4);
  f[3] = 2.0 * c.domain_cap();
  try {
    modular(c, f);
    FAIL() << "expected CapError";
  } catch (const CapError& e) {
    EXPECT_NE(std::string(e.what()).find("f(3)"), std::string::npos) << e.what();
  }
}

TEST(Luxemburg, ZeroAndClosedForm) {
  const NFunction quad = NFunction::power(2.0);
  const SpacePtr z8 = GroupSpace::cyclic(8);
  EXPECT_EQ(luxemburg(quad, GroupFunction(z8)).value, 0.0);
  const NormReport r = luxemburg(quad, GroupFunction::indicator(z8, {0, 1, 2, 3}));
  EXPECT_NEAR(r.value, 0.5, 1e-12);
  EXPECT_EQ(r.method, NormMethod::bisection);
}

TEST(Luxemburg, UnitBallTestMatchesModular) {
  Rng rng(1);
  for (const ComplementaryPair& p : catalog_pairs()) {
    for (int i = 0; i < 30; ++i) {
      const GroupFunction f = random_function(GroupSpace::cyclic(8), rng);
      const double n = luxemburg(p.phi(), f).value;
      GroupFunction s = f;
      s *= 1.0 / n;
      EXPECT_LE(modular(p.phi(), s), 1.0 + 1e-12);
      EXPECT_EQ(n <= 1.0, modular(p.phi(), f) <= 1.0 + 1e-12);
    }
  }
}

TEST(Luxemburg, HomogeneityOnZ8) {
  Rng rng(2);
  for (const ComplementaryPair& p : catalog_pairs()) {
    const GroupFunction f = random_function(GroupSpace::cyclic(8), rng, 0.5);
    GroupFunction g = f;
    g *= 3.7;
    EXPECT_LT(rel(luxemburg(p.phi(), g).value, 3.7 * luxemburg(p.phi(), f).value), 1e-10) << p.name();
  }
}

TEST(Luxemburg, MatchesIndependentBisection) {
  Rng rng(3);
  for (const ComplementaryPair& p : catalog_pairs()) {
    for (const SpacePtr& g : groups()) {
      const GroupFunction f = random_function(g, rng);
      const double want =
          oracle::luxemburg([&](double x) { return p.phi()(x); }, abs_values(f), weights(*g));
      EXPECT_LT(rel(luxemburg(p.phi(), f).value, want), 1e-10) << p.name() << " " << g->describe();
    }
  }
}

TEST(Luxemburg, TriangleAndMonotonicity) {
  Rng rng(4);
  for (const ComplementaryPair& p : catalog_pairs()) {
    for (int i = 0; i < 40; ++i) {
      const SpacePtr g = GroupSpace::cyclic(6);
      const GroupFunction a = random_function(g, rng), b = random_function(g, rng);
      const double lhs = luxemburg(p.phi(), a + b).value;
      EXPECT_GE(luxemburg(p.phi(), a).value + luxemburg(p.phi(), b).value - lhs, -1e-10);
      GroupFunction smaller = a;
      for (std::size_t x = 0; x < g->size(); ++x) smaller[x] *= rng.uniform(0.0, 1.0);
      EXPECT_LE(luxemburg(p.phi(), smaller).value, luxemburg(p.phi(), a).value + 1e-12);
    }
  }
}

TEST(CharFn, Examples) {
  const NFunction quad = NFunction::power(2.0);
  const SpacePtr z8 = GroupSpace::cyclic(8);
  ElementSet all{0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_NEAR(char_fn_norm(quad, *z8, all), 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(char_fn_norm(quad, *z8, {0, 2, 4, 6}), 0.5, 1e-14);
  EXPECT_THROW(char_fn_norm(quad, *z8, {}), DomainError);
}

TEST(CharFn, AgreesWithLuxemburgOnRandomSubsetsOfZ12) {
  Rng rng(5);
  const SpacePtr z12 = GroupSpace::cyclic(12);
  for (const ComplementaryPair& p : catalog_pairs()) {
    for (int i = 0; i < 20; ++i) {
      ElementSet f;
      for (std::size_t x = 0; x < 12; ++x) {
        if (rng.coin()) f.push_back(x);
      }
      if (f.empty()) f.push_back(rng.below(12));
      const double lux = luxemburg(p.phi(), GroupFunction::indicator(z12, f)).value;
      EXPECT_LE(std::abs(lux - char_fn_norm(p.phi(), *z12, f)), 1e-10) << p.name();
    }
  }
}

TEST(Orlicz, ZeroAndQuadraticClosedForm) {
  const ComplementaryPair quad = ComplementaryPair::make(NFunction::power(2.0));
  const SpacePtr z8 = GroupSpace::cyclic(8);
  EXPECT_EQ(orlicz_norm(quad, GroupFunction(z8)).value, 0.0);
  const NormReport r = orlicz_norm(quad, GroupFunction::constant(z8, 1.0));
  EXPECT_NEAR(r.value, std::sqrt(2.0), 1e-9);
  ASSERT_TRUE(r.cross_check.has_value());
  EXPECT_NEAR(*r.cross_check, std::sqrt(2.0), 1e-9);
}

TEST(Orlicz, MinMethodAgreesWithOracleAndIndependentScan) {
  Rng rng(6);
  for (const ComplementaryPair& p : catalog_pairs()) {
    for (const SpacePtr& g : groups()) {
      GroupFunction f = random_function(g, rng);
      if (f.is_zero()) f[0] = 1.0;
      const NormReport r = orlicz_norm(p, f);
      ASSERT_TRUE(r.cross_check.has_value());
      EXPECT_FALSE(r.flagged) << r.note;
      EXPECT_LT(rel(r.value, *r.cross_check), 1e-6) << p.name() << " " << g->describe();
      const double scan =
          oracle::orlicz([&](double x) { return p.phi().value_or_infinity(x); }, abs_values(f),
                         weights(*g));
      EXPECT_LT(rel(r.value, scan), 1e-6) << p.name() << " " << g->describe();
    }
  }
}

TEST(Orlicz, EquivalenceWithLuxemburgOn200Functions) {
  Rng rng(7);
  int count = 0;
  for (int round = 0; round < 10; ++round) {
    for (const ComplementaryPair& p : catalog_pairs()) {
      for (const SpacePtr& g : groups()) {
        const GroupFunction f = random_function(g, rng, rng.uniform(0.01, 5.0));
        const double lux = luxemburg(p.phi(), f).value;
        const double orl = orlicz_norm(p, f, {false}).value;
        ASSERT_LE(lux, orl + 1e-9 * (1.0 + orl)) << p.name();
        ASSERT_LE(orl, 2.0 * lux + 1e-9) << p.name();
        ++count;
      }
    }
  }
  EXPECT_GE(count, 200);
}

TEST(Orlicz, QuadraticAttainsFactorTwo) {
  Rng rng(8);
  const ComplementaryPair quad = ComplementaryPair::make(NFunction::power(2.0));
  for (int i = 0; i < 20; ++i) {
    const GroupFunction f = random_function(GroupSpace::cyclic(8), rng);
    if (f.is_zero()) continue;
    EXPECT_NEAR(orlicz_norm(quad, f).value / luxemburg(quad.phi(), f).value, 2.0, 1e-8);
  }
}

TEST(Orlicz, HolderBoundForUnitBallFunctions) {
  Rng rng(9);
  for (const ComplementaryPair& p : catalog_pairs()) {
    const SpacePtr g = GroupSpace::cyclic(8);
    const GroupFunction f = random_function(g, rng);
    const double orl = orlicz_norm(p, f).value;
    const OracleResult o = orlicz_oracle(p, f);
    EXPECT_LE(modular(p.psi(), o.maximizer), 1.0 + 1e-9);
    EXPECT_LE(pairing(f, o.maximizer), orl * (1.0 + 1e-9));
    for (int i = 0; i < 20; ++i) {
      GroupFunction h = random_function(g, rng);
      if (h.is_zero()) continue;
      h *= 1.0 / luxemburg(p.psi(), h).value;
      EXPECT_LE(pairing(f, h), orl * (1.0 + 1e-9)) << p.name();
    }
  }
}

TEST(NormReport, ZeroOnlyForZero) {
  Rng rng(10);
  for (const ComplementaryPair& p : catalog_pairs()) {
    GroupFunction f(GroupSpace::cyclic(5));
    f[rng.below(5)] = 1e-6;
    EXPECT_GT(luxemburg(p.phi(), f).value, 0.0);
    EXPECT_GT(orlicz_norm(p, f).value, 0.0);
  }
}

}  // namespace
}  // namespace aphi
