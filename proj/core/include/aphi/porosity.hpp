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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "aphi/aphi_core.hpp"
#include "aphi/group_function.hpp"

namespace aphi {

/// sum_y |h(y)| |k(x^{-1} y)| lambda({y}) at one x of a Z-window.
double en_integral(const GroupFunction& h, const GroupFunction& k, std::size_t x);

struct EnMembership {
  bool member = true;
  double max_integral = 0.0;
  std::int64_t argmax = 0;  // integer coordinate of the maximizing x
  bool truncated = false;   // some support touches the window boundary
};

/// (f, g) in E_n: the integral stays <= n for every |x| <= v_radius.
EnMembership en_membership(const GroupFunction& f, const GroupFunction& g,
                           std::int64_t n, std::int64_t v_radius);

/// A point (f, g) of E_n together with the ball radius R.
struct PorosityInstance {
  GroupFunction f;
  GroupFunction g;
  std::int64_t n = 1;
  double radius = 1.0;        // R
  std::int64_t v_radius = 1;  // V = {-r, ..., r}

  /// Validates the window, positivity of n and R, and membership in E_n.
  static PorosityInstance make(GroupFunction f, GroupFunction g, std::int64_t n,
                               double radius, std::int64_t v_radius = 1);
};

/// f = g = chi_[-5,5], n = 11, R = 32, V = [-1, 1] on the given window.
PorosityInstance standard_instance(const SpacePtr& window);

/// A ball member (h, k) = (f~ + d1, g~ + d2) and its E_n test.
struct Probe {
  std::string kind;              // center | adversarial | random
  double delta_f_bound = 0.0;    // certified A_Phi cost of d1
  double delta_g_bound = 0.0;    // certified A_Phi + A_Psi cost of d2
  double delta_f_sup = 0.0;      // ||d1||_inf
  double delta_g_sup = 0.0;      // ||d2||_inf
  std::int64_t violating_x = 0;
  double integral = 0.0;         // value at violating_x, > n
  bool all_of_u_violate = false; // every x in U violates
  double min_h_on_k = 0.0;       // >= R/16 expected
  double min_k_on_k = 0.0;       // > R/32 expected
  bool k_bound_on_uk = false;    // |k| > R/32 on U K (diagnostic)
};

struct PorosityWitness {
  std::array<int, 2> quadrant{1, 1};        // (s(1), s(2))
  std::array<double, 4> quadrant_measures{}; // order (1,1) (1,-1) (-1,1) (-1,-1)
  std::vector<std::int64_t> base_points;    // a_1 .. a_{m0}
  std::size_t m0 = 0;
  ElementSet k;
  double k_measure = 0.0;
  std::int64_t n = 0;
  double threshold = 0.0;  // 512 n / R^2
  double margin = 0.0;     // k_measure - threshold
  LemmaCertificate lemma;
  GroupFunction f_tilde;
  GroupFunction g_tilde;
  double budget_sum = 0.0;   // cost_A_Phi(u) + cost_A_Psi(u), <= 8
  double dist_f = 0.0;       // certified ||f~ - f||_{A_Phi}
  double dist_g_phi = 0.0;   // certified ||g~ - g||_{A_Phi}
  double dist_g = 0.0;       // certified ||g~ - g||_{A_Phi n A_Psi}
  double avoidance_ratio = 1.0 / 32.0;
  double final_bound = 0.0;  // (R^2 / 512) lambda(K)
  std::vector<Probe> probes;

  bool all_probes_violate() const;
  bool inside_outer_ball(double radius) const;
};

/// Runs the avoidance construction on a Z-window and probes `probe_count`
/// members of the ball of radius R/32 around (f~, g~). Throws
/// InfeasibleError when the window is too small and ContradictionError when
/// a probe stays inside E_n.
PorosityWitness build_witness(const PorosityInstance& inst, const ComplementaryPair& pair,
                              std::size_t probe_count, std::uint64_t seed);

/// Human-readable dump of a witness, used for contradiction reports.
std::string dump(const PorosityWitness& w);

}  // namespace aphi
