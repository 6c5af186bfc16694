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
#include <cstdint>
#include <string>
#include <vector>

#include "aphi/aphi_core.hpp"
#include "aphi/group_function.hpp"
#include "aphi/nfunction.hpp"

namespace aphi {

/// One axiom check with its worst observed slack.
struct SegalCheck {
  std::string name;
  double worst_slack = 0.0;
  bool pass = true;
  std::string detail;
};

struct SegalReport {
  std::string group;
  std::string pair;
  std::size_t samples = 0;
  std::size_t rank = 0;  // rank of the point-separating plateau functions
  std::vector<SegalCheck> checks;
  bool symmetric = false;  // right translations act isometrically too

  bool pass() const;
};

/// Density, norm domination, left/right translation invariance of witness
/// costs and continuity of translation, on a finite normalized group.
/// Throws ScopeError for Z-windows.
SegalReport segal_report(const SpacePtr& space, const ComplementaryPair& pair,
                         std::size_t samples, std::uint64_t seed);

struct UnitReport {
  GroupFunction unit;         // lambda({e})^{-1} chi_e
  double max_left_error = 0.0;  // max_x ||e_u * chi_x - chi_x||_inf
  double max_right_error = 0.0;
  std::size_t basis_size = 0;
  AphiBound bracket;          // A_Phi bracket for the unit
  LemmaCertificate pointwise; // 1_G from the plateau construction with E = G

  bool pass(double tol = 1e-12) const;
};

/// The convolution unit and the pointwise unit of a finite group.
/// Throws ScopeError on Z-windows, which have no unit.
UnitReport convolution_unit(const SpacePtr& space, const ComplementaryPair& pair,
                            double epsilon = 1.0);

/// w(x) = exp(2 pi i exponent[x] / modulus).
struct Character {
  std::vector<std::uint64_t> exponent;

  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
};

struct CharacterSet {
  SpacePtr space;
  std::uint64_t modulus = 1;
  std::vector<Character> characters;  // sorted

  Complex value(std::size_t character, std::size_t x) const;
  GroupFunction weight(std::size_t character) const;
  /// phi_w(u) = sum_x u(x) w(x) lambda({x})
  Complex pair_with(std::size_t character, const GroupFunction& u) const;
  /// Same characters expressed over a new modulus (a multiple of the current one).
  CharacterSet rescaled(std::uint64_t new_modulus) const;

  friend bool operator==(const CharacterSet& a, const CharacterSet& b) {
    return a.modulus == b.modulus && a.characters == b.characters;
  }
};

/// All homomorphisms G -> roots of unity, found by assigning exponents to a
/// generating set and propagating. Exact integer arithmetic throughout.
/// Throws ScopeError for windows and for nonabelian groups (naming the
/// failing commutator).
CharacterSet enumerate_characters(const SpacePtr& space);

/// Exhaustive search over |G|-th roots of unity for weights w with
/// phi_w(delta_s * delta_t) = phi_w(delta_s) phi_w(delta_t), evaluated by
/// convolution in floating point with the given tolerance. Exponents are
/// reported over modulus |G|.
CharacterSet multiplicative_functional_search(const SpacePtr& space, double tolerance = 1e-9);

struct MultiplicativityCheck {
  bool pass = true;
  double worst = 0.0;  // max |phi(delta_s * delta_t) - phi(delta_s) phi(delta_t)|
  std::size_t s = 0;
  std::size_t t = 0;
};

/// Tests an arbitrary weight vector against every pair (s, t).
MultiplicativityCheck is_multiplicative(const SpacePtr& space, const std::vector<Complex>& w,
                                        double tolerance = 1e-9);

}  // namespace aphi
