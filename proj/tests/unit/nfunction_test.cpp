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

#include "aphi/nfunction.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "aphi/errors.hpp"
#include "aphi/random.hpp"
#include "oracles.hpp"

namespace aphi {
namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

TEST(Conjugate, CubicPowerMatchesThreeHalves) {
  const NFunction phi = NFunction::power(3.0);
  for (double y : {0.5, 1.0, 2.0}) {
    const double expect = std::pow(y, 1.5) / 1.5;
    EXPECT_LT(rel(conjugate_at(phi, y).value, expect), 1e-8) << "y=" << y;
  }
}

TEST(Conjugate, EntropyAtOneIsEMinusTwo) {
  EXPECT_LT(rel(conjugate_at(NFunction::entropy(), 1.0).value, std::numbers::e - 2.0), 1e-8);
}

TEST(Conjugate, ZeroMapsToZero) {
  for (const ComplementaryPair& p : catalog_pairs()) {
    EXPECT_EQ(conjugate_at(p.phi(), 0.0).value, 0.0) << p.name();
    EXPECT_EQ(p.psi()(0.0), 0.0) << p.name();
  }
}

TEST(Conjugate, PowerFamilyAgreesWithClosedFormOnGrid) {
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    const NFunction phi = NFunction::power(p);
    const double q = p / (p - 1.0);
    for (double y : geometric_grid(1e-2, 1e2, 57)) {
      const double expect = std::pow(y, q) / q;
      ASSERT_LT(rel(conjugate_at(phi, y).value, expect), 1e-8) << "p=" << p << " y=" << y;
    }
  }
}

TEST(Conjugate, EntropyAndCoshAgreeWithDerivativeFreeOracle) {
  for (const NFunction& phi : {NFunction::entropy(), NFunction::cosh()}) {
    const auto closed = phi.closed_form_complement();
    ASSERT_TRUE(closed.has_value());
    for (double y : geometric_grid(1e-2, 20.0, 31)) {
      const double want = oracle::conjugate([&](double x) { return phi(x); }, y);
      EXPECT_LT(rel(conjugate_at(phi, y).value, want), 1e-6) << phi.name() << " y=" << y;
      EXPECT_LT(rel((*closed)(y), want), 1e-6) << phi.name() << " y=" << y;
    }
  }
}

TEST(Conjugate, CoshComplementClosedFormMatchesNumeric) {
  const ComplementaryPair numeric = ComplementaryPair::numeric(NFunction::cosh());
  const NFunction closed = NFunction::cosh_complement();
  for (double y : geometric_grid(1e-2, 1e2, 41)) {
    EXPECT_LT(rel(numeric.psi()(y), closed(y)), 1e-6) << "y=" << y;
  }
}

TEST(Conjugate, BiconjugateRecoversPhi) {
  for (const ComplementaryPair& p : catalog_pairs()) {
    const NFunction back = conjugate(p.psi());
    for (double x : geometric_grid(1e-2, 1e2, 21)) {
      if (x > p.phi().domain_cap()) continue;
      EXPECT_LT(rel(back(x), p.phi()(x)), 1e-6) << p.name() << " x=" << x;
    }
  }
}

TEST(Conjugate, NonConvexDerivativeIsRejected) {
  const NFunction bad = NFunction::from_functions(
      "kinked", [](double x) { return x < 1.5 ? x * x / 2 : 1.125 + 0.5 * (x - 1.5); },
      [](double x) { return x < 1.5 ? x : (x < 3.0 ? 0.5 : 2.0 * x); });
  EXPECT_THROW(conjugate_at(bad, 1.2), ConvexityError);
}

TEST(Conjugate, NonConvexValuesAreRejectedWithoutDerivative) {
  const NFunction bad = NFunction::from_functions(
      "flattening", [](double x) { return x <= 6.0 ? x * x / 2 : 18.0 + 0.01 * (x - 6.0); });
  EXPECT_THROW(conjugate_at(bad, 10.0), ConvexityError);
}

TEST(Conjugate, BeyondCapIsFlaggedTruncated) {
  const ConjugateValue v = conjugate_at(NFunction::cosh(), 1e305);
  EXPECT_TRUE(v.truncated);
  EXPECT_LE(v.maximizer, NFunction::cosh().domain_cap());
}

TEST(Inverse, QuadraticAtTwo) { EXPECT_NEAR(inverse(NFunction::power(2.0), 2.0), 2.0, 1e-12); }

TEST(Inverse, CoshAtOneMatchesArccosh) {
  const double want = oracle::inverse([](double x) { return std::cosh(x) - 1.0; }, 1.0);
  EXPECT_NEAR(inverse(NFunction::cosh(), 1.0), want, 1e-12);
  EXPECT_NEAR(want, 1.3169578969248167, 1e-12);
}

TEST(Inverse, ZeroAndErrors) {
  const NFunction phi = NFunction::power(2.0);
  EXPECT_EQ(inverse(phi, 0.0), 0.0);
  EXPECT_THROW(inverse(phi, -1.0), DomainError);
  EXPECT_THROW(inverse(NFunction::cosh(), 1e305), CapError);
}

TEST(Inverse, TwoSidedOnRandomPoints) {
  Rng rng(11);
  for (const ComplementaryPair& p : catalog_pairs()) {
    for (const NFunction* f : {&p.phi(), &p.psi()}) {
      for (int i = 0; i < 200; ++i) {
        const double t = std::pow(10.0, rng.uniform(-4.0, 4.0));
        const double x = inverse(*f, t);
        ASSERT_LT(rel((*f)(x), t), 1e-10) << f->name() << " t=" << t;
        ASSERT_LT(rel(inverse(*f, (*f)(x)), x), 1e-10) << f->name() << " x=" << x;
      }
    }
  }
}

TEST(Young, Examples) {
  const ComplementaryPair quad = ComplementaryPair::make(NFunction::power(2.0));
  EXPECT_NEAR(young_gap(quad, 3.0, 3.0), 0.0, 1e-12);
  EXPECT_NEAR(young_gap(quad, 1.0, 0.0), 0.5, 1e-15);
}

TEST(Young, GridSweepIsNonnegative) {
  for (const ComplementaryPair& p : catalog_pairs()) {
    for (double x = 0.0; x <= 10.0; x += 0.125) {
      for (double y = 0.0; y <= 10.0; y += 0.125) {
        const double gap = young_gap(p, x, y);
        ASSERT_GE(gap, -1e-9 * (1.0 + p.phi()(x) + p.psi()(y))) << p.name() << " " << x << "," << y;
      }
    }
  }
}

TEST(Young, EqualityAtDerivative) {
  for (const ComplementaryPair& p : catalog_pairs()) {
    for (double x : geometric_grid(1e-2, 5.0, 25)) {
      const double y = p.phi().derivative(x);
      EXPECT_LE(std::abs(young_gap(p, x, y)), 1e-8 * (1.0 + p.phi()(x))) << p.name() << " x=" << x;
    }
  }
}

TEST(InverseProduct, QuadraticHitsTwo) {
  const ComplementaryPair quad = ComplementaryPair::make(NFunction::power(2.0));
  EXPECT_NEAR(inverse_product_ratio(quad, 1.0), 2.0, 1e-12);
}

TEST(InverseProduct, CubicAtOneInsideBounds) {
  const double r = inverse_product_ratio(ComplementaryPair::make(NFunction::power(3.0)), 1.0);
  // Phi^-1(1) = 3^(1/3), Psi^-1(1) = 1.5^(2/3).
  EXPECT_NEAR(r, std::cbrt(3.0) * std::pow(1.5, 2.0 / 3.0), 1e-10);
  EXPECT_GT(r, 1.0);
  EXPECT_LE(r, 2.0);
}

TEST(InverseProduct, SweepAllPairs) {
  for (const ComplementaryPair& p : catalog_pairs()) {
    for (double t : geometric_grid(1e-3, 1e3, 41)) {
      const double r = inverse_product_ratio(p, t);
      ASSERT_GT(r, 1.0) << p.name() << " t=" << t;
      ASSERT_LE(r, 2.0 + 1e-9) << p.name() << " t=" << t;
    }
  }
}

TEST(Axioms, CatalogPasses) {
  for (const ComplementaryPair& p : catalog_pairs()) {
    for (const PropertyCheck& c : check_axioms(p.phi())) EXPECT_TRUE(c.pass) << p.name() << " " << c.name;
    for (const PropertyCheck& c : check_axioms(p.psi())) EXPECT_TRUE(c.pass) << p.name() << " " << c.name;
    for (const PropertyCheck& c : check_pair(p)) EXPECT_TRUE(c.pass) << p.name() << " " << c.name;
  }
}

TEST(Axioms, LinearGrowthFailsSuperlinearity) {
  const NFunction lin = NFunction::from_functions("linear-ish", [](double x) { return x; });
  bool failed = false;
  for (const PropertyCheck& c : check_axioms(lin)) failed = failed || !c.pass;
  EXPECT_TRUE(failed);
}

TEST(Tabulated, PiecewiseLinearSlopeGivesExactQuadratic) {
  const NFunction t = NFunction::tabulated({{0, 0, 0}, {1, 0.5, 1}, {2, 2, 2}, {10, 50, 10}});
  EXPECT_NEAR(t(1.5), 1.125, 1e-12);
  EXPECT_NEAR(t(7.0), 24.5, 1e-12);
  const ComplementaryPair p = ComplementaryPair::numeric(t);
  EXPECT_NEAR(p.psi()(3.0), 4.5, 1e-9);
}

TEST(Tabulated, Validation) {
  EXPECT_THROW(NFunction::tabulated({{1, 0.5, 1}, {2, 2, 2}}), DomainError);
  EXPECT_THROW(NFunction::tabulated({{0, 0, 0}, {1, 0.5, 1}, {2, 1.0, 0.5}}), ConvexityError);
  EXPECT_THROW(NFunction::tabulated({{0, 0, 0}, {1, 0.9, 1}, {2, 2, 2}}), DomainError);
}

TEST(Evaluation, BeyondCapThrowsNamedCapError) {
  const NFunction c = NFunction::cosh();
  EXPECT_THROW(c(2.0 * c.domain_cap()), CapError);
  EXPECT_TRUE(std::isinf(c.value_or_infinity(2.0 * c.domain_cap())));
}

TEST(Evaluation, EvenInArgument) {
  for (const ComplementaryPair& p : catalog_pairs()) {
    EXPECT_EQ(p.phi()(-1.7), p.phi()(1.7)) << p.name();
  }
}

}  // namespace
}  // namespace aphi
