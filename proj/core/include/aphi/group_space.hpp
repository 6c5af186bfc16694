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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace aphi {

/// Exact Haar mass of a singleton.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Sorted, duplicate-free carrier indices.
using ElementSet = std::vector<std::size_t>;

enum class GroupKind { cyclic, window, product, table };

class GroupSpace;
using SpacePtr = std::shared_ptr<const GroupSpace>;

/// A discrete unimodular group with its Haar measure.
///
/// Elements are carrier indices 0..size()-1 in a fixed canonical order.
/// Finite groups carry normalized counting measure 1/|G|; the Z-window
/// [-W, W] carries counting measure and reports products that leave the
/// window as std::nullopt.
class GroupSpace {
 public:
  static SpacePtr cyclic(std::size_t n);
  static SpacePtr window(std::int64_t radius);
  static SpacePtr product(std::vector<SpacePtr> factors);
  /// Multiplication table over element indices. `inverse` is derived when
  /// empty. The table is validated against the group axioms.
  static SpacePtr table(std::vector<std::string> labels,
                        std::vector<std::vector<std::size_t>> mul,
                        std::size_t identity,
                        std::vector<std::size_t> inverse = {});
  /// Symmetric group S_n (n <= 5) as a permutation table.
  static SpacePtr symmetric(std::size_t n);

  GroupKind kind() const { return kind_; }
  std::size_t size() const { return labels_.size(); }
  bool is_finite() const { return kind_ != GroupKind::window; }
  bool is_window() const { return kind_ == GroupKind::window; }
  std::int64_t window_radius() const { return radius_; }

  std::optional<std::size_t> mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  std::size_t identity() const { return identity_; }

  Rational weight(std::size_t) const { return weight_; }
  double weight_value(std::size_t) const { return weight_.value(); }
  /// lambda(G) for finite groups; throws ScopeError on windows.
  Rational total_measure() const;
  double measure(const ElementSet& set) const;

  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> find(std::string_view label) const;

  /// Integer coordinate of a Z-window or Z_n element.
  std::int64_t integer_at(std::size_t i) const;
  /// Index of integer n in a Z-window, nullopt outside.
  std::optional<std::size_t> window_index(std::int64_t n) const;
  /// All integers in [lo, hi] as a window set; throws if outside the window.
  ElementSet interval(std::int64_t lo, std::int64_t hi) const;

  std::string describe() const;
  std::optional<std::pair<std::size_t, std::size_t>> noncommuting_pair() const;
  bool is_abelian() const { return !noncommuting_pair().has_value(); }
  std::size_t order_of(std::size_t a) const;

  const std::vector<SpacePtr>& factors() const { return factors_; }

 private:
  GroupSpace() = default;
  void index_labels();

  GroupKind kind_ = GroupKind::cyclic;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> by_label_;
  std::size_t identity_ = 0;
  Rational weight_{1, 1};
  std::int64_t radius_ = 0;
  std::size_t modulus_ = 0;
  std::vector<SpacePtr> factors_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
};

/// Associativity, identity and inverse laws plus left invariance of the
/// weights. Exhaustive for |G| <= 64, otherwise `samples` random triples.
struct AxiomReport {
  bool pass = true;
  bool exhaustive = false;
  std::size_t triples = 0;
  std::string detail;
};
AxiomReport check_group_axioms(const GroupSpace& g, std::uint64_t seed = 0,
                               std::size_t samples = 20000);

/// Set product AB = {ab}; `truncated` when some product leaves a Z-window.
struct SetProduct {
  ElementSet set;
  bool truncated = false;
};
SetProduct product_set(const GroupSpace& g, const ElementSet& a, const ElementSet& b);
ElementSet inverse_set(const GroupSpace& g, const ElementSet& a);
ElementSet normalize_set(ElementSet s);

/// U with 0 < lambda(U) and lambda(KU) < (1+eps) lambda(U).
struct LeptinSet {
  ElementSet set;
  double measure = 0.0;          // lambda(U)
  double product_measure = 0.0;  // lambda(KU)
  double ratio = 0.0;            // lambda(KU) / lambda(U)
  double margin = 0.0;           // (1+eps) - ratio, strictly positive
  std::int64_t half_width = -1;  // N for U = [-N, N] on windows
};

/// Finite groups return the whole carrier. Windows return the smallest
/// symmetric interval [-N, N] meeting the ratio whose product with K fits
/// in the window; otherwise InfeasibleError.
LeptinSet leptin_search(const GroupSpace& g, const ElementSet& k, double epsilon);

}  // namespace aphi
