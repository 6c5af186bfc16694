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

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aphi {

/// Numerical slack used across the library. All values are relative.
struct Tolerances {
  double root = 1e-12;       // root-finding residuals
  double conjugacy = 1e-8;   // numeric vs. closed-form conjugates
  double check = 1e-9;       // inequality slack accepted as rounding
};

enum class NFunctionKind {
  power,
  entropy,
  cosh,
  exp_complement,   // e^y - y - 1, complement of entropy
  cosh_complement,  // y asinh(y) - sqrt(1+y^2) + 1, complement of cosh
  custom,
  conjugate,        // numerically conjugated from another N-function
};

/// One row of a tabulated N-function: x, Phi(x) and the right derivative phi(x).
struct TablePoint {
  double x = 0.0;
  double value = 0.0;
  double slope = 0.0;
};

namespace detail {
class NFunctionModel;
}

/// A Young N-function Phi on [0, inf), extended evenly to the real line.
///
/// Values are immutable and cheap to copy. The evaluator always receives
/// |x|. Evaluation past domain_cap() throws CapError; value_or_infinity()
/// saturates instead, which is what the bracketing searches need.
class NFunction {
 public:
  using Function = std::function<double(double)>;

  static NFunction power(double p);
  static NFunction entropy();
  static NFunction cosh();
  static NFunction exp_complement();
  static NFunction cosh_complement();

  /// Piecewise-linear right derivative through the rows; Phi is its integral.
  /// The first row must be (0, 0, 0) and tabulated values must agree with
  /// the integral to 1e-3 relative.
  static NFunction tabulated(std::vector<TablePoint> rows);

  /// User-supplied evaluator. Without a derivative, conjugation falls back
  /// to golden-section maximization.
  static NFunction from_functions(std::string name, Function value,
                                  Function derivative = {});

  double operator()(double x) const;
  double value_or_infinity(double x) const;
  double derivative(double x) const;
  bool has_derivative() const;

  /// Largest x for which Phi(x) stays below the overflow threshold.
  double domain_cap() const;

  NFunctionKind kind() const;
  std::string name() const;
  std::optional<double> exponent() const;

  /// Closed-form complement for catalog kinds, nullopt otherwise.
  std::optional<NFunction> closed_form_complement() const;

  /// Wraps an arbitrary model. Used by conjugate().
  explicit NFunction(std::shared_ptr<const detail::NFunctionModel> model);

 private:
  std::shared_ptr<const detail::NFunctionModel> model_;
};

/// Threshold below which Phi values count as numerically finite.
inline constexpr double kOverflowThreshold = 1e300;

struct ConjugateValue {
  double value = 0.0;      // Psi(y)
  double maximizer = 0.0;  // x attaining the supremum; also Psi'(y)
  bool truncated = false;  // supremum lies beyond phi.domain_cap()
};

/// Psi(y) = sup{ x|y| - Phi(x) : x >= 0 } at a single point.
ConjugateValue conjugate_at(const NFunction& phi, double y,
                            const Tolerances& tol = {});

/// The complementary N-function of phi, evaluated on demand. Values at the
/// points of `grid` are computed eagerly and memoized.
NFunction conjugate(const NFunction& phi, std::span<const double> grid = {},
                    const Tolerances& tol = {});

/// Phi^{-1}(t) by doubling bracket and bisection.
double inverse(const NFunction& phi, double t, const Tolerances& tol = {});

class ComplementaryPair {
 public:
  enum class Construction { closed_form, numeric };

  /// Uses the closed-form complement when the catalog has one.
  static ComplementaryPair make(NFunction phi);
  static ComplementaryPair numeric(NFunction phi,
                                   std::span<const double> grid = {});
  static ComplementaryPair closed_form(NFunction phi);

  const NFunction& phi() const { return phi_; }
  const NFunction& psi() const { return psi_; }
  Construction construction() const { return construction_; }
  std::string name() const;

  /// (Psi, Phi): the pair seen from the complementary side.
  ComplementaryPair swapped() const;

 private:
  ComplementaryPair(NFunction phi, NFunction psi, Construction c)
      : phi_(std::move(phi)), psi_(std::move(psi)), construction_(c) {}

  NFunction phi_;
  NFunction psi_;
  Construction construction_;
};

/// The four pairs exercised by the test battery:
/// power p=2, power p=3, entropy, cosh (closed-form complements).
std::vector<ComplementaryPair> catalog_pairs();

/// Phi(|x|) + Psi(|y|) - |x||y|; nonnegative by Young's inequality.
double young_gap(const ComplementaryPair& pair, double x, double y);

/// Phi^{-1}(t) Psi^{-1}(t) / t, which lies in (1, 2].
double inverse_product_ratio(const ComplementaryPair& pair, double t,
                             const Tolerances& tol = {});

/// One sampled property of an N-function or pair.
struct PropertyCheck {
  std::string name;
  double worst_slack = 0.0;  // >= 0 means satisfied
  bool pass = false;
  std::string detail;
};

/// Phi(0) = 0, convexity, strict monotonicity and growth of Phi(x)/x,
/// sampled on geometric grids inside the domain cap.
std::vector<PropertyCheck> check_axioms(const NFunction& phi,
                                        const Tolerances& tol = {});

/// Young's inequality, its equality case and numeric biconjugacy.
std::vector<PropertyCheck> check_pair(const ComplementaryPair& pair,
                                      const Tolerances& tol = {});

/// Geometric grid of `count` points from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, std::size_t count);

}  // namespace aphi
