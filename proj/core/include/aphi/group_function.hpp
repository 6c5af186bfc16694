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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "aphi/group_space.hpp"

namespace aphi {

using Complex = std::complex<double>;

/// A complex-valued function on a GroupSpace carrier, zero off the carrier.
class GroupFunction {
 public:
  /// Empty placeholder without a space; assign before use.
  GroupFunction() = default;
  explicit GroupFunction(SpacePtr space);
  GroupFunction(SpacePtr space, std::vector<Complex> values);

  static GroupFunction indicator(SpacePtr space, const ElementSet& set);
  static GroupFunction constant(SpacePtr space, Complex c);
  static GroupFunction point(SpacePtr space, std::size_t x, Complex c = 1.0);

  const GroupSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  std::size_t size() const { return values_.size(); }

  Complex operator[](std::size_t i) const { return values_[i]; }
  Complex& operator[](std::size_t i) { return values_[i]; }
  std::span<const Complex> values() const { return values_; }

  GroupFunction& operator+=(const GroupFunction& o);
  GroupFunction& operator-=(const GroupFunction& o);
  GroupFunction& operator*=(Complex c);
  friend GroupFunction operator+(GroupFunction a, const GroupFunction& b) { return a += b; }
  friend GroupFunction operator-(GroupFunction a, const GroupFunction& b) { return a -= b; }
  friend GroupFunction operator*(Complex c, GroupFunction a) { return a *= c; }
  friend GroupFunction operator*(GroupFunction a, Complex c) { return a *= c; }

  double sup_norm() const;
  /// sum |f(x)| lambda({x})
  double l1_norm() const;
  ElementSet support() const;
  bool is_zero() const;
  /// Largest elementwise |f(x) - g(x)|.
  double max_abs_diff(const GroupFunction& o) const;

 private:
  SpacePtr space_;
  std::vector<Complex> values_;
};

/// Identical pointer or identical description.
bool same_space(const GroupSpace& a, const GroupSpace& b);

/// A result whose exact value on Z may depend on mass outside the window.
struct FlaggedFunction {
  GroupFunction function;
  bool truncated = false;
};

/// (f*g)(x) = sum_y f(y) g(y^{-1}x) lambda({y}).
FlaggedFunction convolve(const GroupFunction& f, const GroupFunction& g);

/// g(x^{-1}).
GroupFunction check(const GroupFunction& g);

/// (L_t f)(x) = f(t^{-1}x).
FlaggedFunction translate_left(std::size_t t, const GroupFunction& f);
/// (R_t f)(x) = f(xt).
FlaggedFunction translate_right(std::size_t t, const GroupFunction& f);

}  // namespace aphi
