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

#include <cstddef>
#include <string>
#include <vector>

#include "aphi/group_function.hpp"
#include "aphi/nfunction.hpp"
#include "aphi/orlicz_norms.hpp"

namespace aphi {

/// One summand f * g-check of a decomposition.
struct Term {
  GroupFunction f;
  GroupFunction g;
};

/// u = sum_i f_i * (g_i)-check, with u stored as the target.
struct Decomposition {
  std::vector<Term> terms;
  GroupFunction target;

  Decomposition() = default;
  explicit Decomposition(GroupFunction target_) : target(std::move(target_)) {}
  Decomposition(std::vector<Term> terms_, GroupFunction target_)
      : terms(std::move(terms_)), target(std::move(target_)) {}

  FlaggedFunction reconstruct() const;
  /// max |sum_i f_i * g_i-check - target|, +inf when the sum leaves a window.
  double reconstruction_error() const;
  /// Error within 1e-9 (1 + ||target||_inf).
  bool valid() const;
};

/// Which norms price a term. The mixed choice N_Phi(f) ||g||_Psi is the
/// definition; all_luxemburg uses N_Phi(f) N_Psi(g).
enum class CostMode { mixed, all_luxemburg };

double term_cost(const Term& t, const ComplementaryPair& pair,
                 CostMode mode = CostMode::mixed);

/// sum_i N_Phi(f_i) ||g_i||_Psi. Throws DomainError for an invalid
/// reconstruction.
double cost(const Decomposition& d, const ComplementaryPair& pair,
            CostMode mode = CostMode::mixed);

/// u = sum_t u(t) lambda(t)^{-1} (chi_t * chi_e-check).
Decomposition atomic_decomposition(const GroupFunction& u);

/// Bracket lower <= ||u||_{A_Phi} <= upper. `upper` is the cost of `witness`.
struct AphiBound {
  double upper = 0.0;
  double lower = 0.0;
  Decomposition witness;
  std::string witness_origin;
  std::size_t moves = 0;
};

struct AphiOptions {
  std::size_t budget = 32;
  CostMode mode = CostMode::mixed;
  /// Caller-supplied decompositions of u, always evaluated.
  std::vector<Decomposition> hints;
};

/// Best decomposition cost found. Starts from the atomic decomposition and
/// tries, in a fixed order: merging terms with equal g-factors, rebalancing
/// scales, the identity pair (lambda(e)^{-1} chi_e, u-check), and plateau
/// pairs (c chi_A, chi_B / lambda(B)). Each move consumes one unit of
/// budget, so a larger budget never returns a larger bound.
AphiBound aphi_upper(const GroupFunction& u, const ComplementaryPair& pair,
                     const AphiOptions& options = {});

/// v = lambda(F)^{-1} chi_{EF} * chi_F-check, so v(x) = lambda(xF n EF)/lambda(F).
FlaggedFunction plateau_function(const SpacePtr& space, const ElementSet& e,
                                 const ElementSet& f);

/// One step of a certified inequality chain.
struct InequalityStep {
  enum class Relation { less, less_equal, equal };

  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::less_equal;
  /// Relative to 1 + |rhs|: the allowed mismatch for `equal`, a rounding
  /// allowance for steps that are tight in exact arithmetic otherwise.
  double tolerance = 0.0;

  /// rhs - lhs (+ allowance) for inequalities; tolerance slack for equalities.
  double slack() const;
  bool holds() const;
};

std::string to_string(InequalityStep::Relation r);

/// The plateau function of the amenability lemma with every claim checked.
struct LemmaCertificate {
  GroupFunction u;
  Decomposition witness;
  LeptinSet leptin;
  ElementSet ev;            // E V
  ElementSet support_bound; // E V V^{-1}
  double epsilon = 0.0;

  double max_deviation_on_e = 0.0;  // max_{x in E} |u(x) - 1|
  double min_value = 0.0;
  double max_value = 0.0;
  double max_imaginary = 0.0;
  bool support_ok = false;

  double cost_phi = 0.0;  // witness cost in A_Phi
  double cost_psi = 0.0;  // witness cost in A_Psi
  std::vector<InequalityStep> chain_phi;
  std::vector<InequalityStep> chain_psi;

  bool unit_on_e() const { return max_deviation_on_e <= 1e-12; }
  bool in_unit_interval() const {
    return min_value >= -1e-12 && max_value <= 1.0 + 1e-12 && max_imaginary <= 1e-12;
  }
  bool pass() const;
};

/// Builds u = chi_{EV} * (chi_V / lambda(V))-check for a Leptin set V of
/// (E, epsilon) and certifies u = 1 on E, 0 <= u <= 1, supp u in E V V^{-1},
/// and both decomposition costs below 2(1 + epsilon).
LemmaCertificate lemma_r_construct(const SpacePtr& space, const ElementSet& e,
                                   const ComplementaryPair& pair, double epsilon);

/// The convolution bound on a finite normalized group.
struct SubmultReport {
  double alpha = 0.0;         // N_Phi(1_G) = 1 / Phi^{-1}(1)
  double beta = 0.0;          // ||1_G||_Psi
  double upper_uv = 0.0;      // aphi_upper(u * v)
  double single_pair = 0.0;   // N_Phi(u) ||v-check||_Psi
  double outer = 0.0;         // alpha beta ||u||_inf ||v||_inf
  double algebra_bound = 0.0; // alpha beta aphi_upper(u) aphi_upper(v)
  std::vector<InequalityStep> steps;
  bool pass(double slack_floor = -1e-9) const;
};

SubmultReport convolution_submultiplicativity(const GroupFunction& u,
                                              const GroupFunction& v,
                                              const ComplementaryPair& pair,
                                              std::size_t budget = 32);

}  // namespace aphi
