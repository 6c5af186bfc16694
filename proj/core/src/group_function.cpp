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

#include "aphi/group_function.hpp"

#include <algorithm>
#include <cmath>

#include "aphi/errors.hpp"

namespace aphi {

namespace {

void require_same(const GroupFunction& a, const GroupFunction& b, const char* op) {
  if (!same_space(a.space(), b.space())) {
    throw DomainError(std::string(op) + ": functions live on different spaces (" +
                      a.space().describe() + " vs " + b.space().describe() + ")");
  }
}

}  // namespace

GroupFunction::GroupFunction(SpacePtr space)
    : space_(std::move(space)), values_(space_->size(), Complex{}) {}

GroupFunction::GroupFunction(SpacePtr space, std::vector<Complex> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_->size()) {
    throw DomainError("function data has " + std::to_string(values_.size()) +
                      " values for a carrier of size " + std::to_string(space_->size()));
  }
  for (const Complex& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("function values must be finite");
    }
  }
}

GroupFunction GroupFunction::indicator(SpacePtr space, const ElementSet& set) {
  GroupFunction f(std::move(space));
  for (std::size_t i : set) f.values_.at(i) = 1.0;
  return f;
}

GroupFunction GroupFunction::constant(SpacePtr space, Complex c) {
  GroupFunction f(std::move(space));
  std::fill(f.values_.begin(), f.values_.end(), c);
  return f;
}

GroupFunction GroupFunction::point(SpacePtr space, std::size_t x, Complex c) {
  GroupFunction f(std::move(space));
  f.values_.at(x) = c;
  return f;
}

GroupFunction& GroupFunction::operator+=(const GroupFunction& o) {
  require_same(*this, o, "operator+");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

GroupFunction& GroupFunction::operator-=(const GroupFunction& o) {
  require_same(*this, o, "operator-");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

GroupFunction& GroupFunction::operator*=(Complex c) {
  for (Complex& v : values_) v *= c;
  return *this;
}

double GroupFunction::sup_norm() const {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double GroupFunction::l1_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    s += std::abs(values_[i]) * space_->weight_value(i);
  }
  return s;
}

ElementSet GroupFunction::support() const {
  ElementSet s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != Complex{}) s.push_back(i);
  }
  return s;
}

bool GroupFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Complex& v) { return v == Complex{}; });
}

double GroupFunction::max_abs_diff(const GroupFunction& o) const {
  require_same(*this, o, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    m = std::max(m, std::abs(values_[i] - o.values_[i]));
  }
  return m;
}

bool same_space(const GroupSpace& a, const GroupSpace& b) {
  return &a == &b || (a.size() == b.size() && a.describe() == b.describe() &&
                      a.kind() != GroupKind::table);
}

FlaggedFunction convolve(const GroupFunction& f, const GroupFunction& g) {
  require_same(f, g, "convolve");
  const GroupSpace& s = f.space();
  FlaggedFunction out{GroupFunction(f.space_ptr())};
  const ElementSet sf = f.support();
  const ElementSet sg = g.support();
  // Substituting z = y^{-1}x: each pair (y, z) contributes at x = yz.
  for (std::size_t y : sf) {
    const Complex fy = f[y] * s.weight_value(y);
    for (std::size_t z : sg) {
      if (auto x = s.mul(y, z)) {
        out.function[*x] += fy * g[z];
      } else {
        out.truncated = true;
      }
    }
  }
  return out;
}

GroupFunction check(const GroupFunction& g) {
  GroupFunction out(g.space_ptr());
  for (std::size_t x = 0; x < g.size(); ++x) out[g.space().inv(x)] = g[x];
  return out;
}

FlaggedFunction translate_left(std::size_t t, const GroupFunction& f) {
  const GroupSpace& s = f.space();
  if (t >= s.size()) throw DomainError("translate_left: element out of range");
  FlaggedFunction out{GroupFunction(f.space_ptr())};
  for (std::size_t y : f.support()) {
    if (auto x = s.mul(t, y)) {
      out.function[*x] = f[y];
    } else {
      out.truncated = true;
    }
  }
  return out;
}

FlaggedFunction translate_right(std::size_t t, const GroupFunction& f) {
  const GroupSpace& s = f.space();
  if (t >= s.size()) throw DomainError("translate_right: element out of range");
  const std::size_t t_inv = s.inv(t);
  FlaggedFunction out{GroupFunction(f.space_ptr())};
  // (R_t f)(x) = f(xt): the value f(y) moves to x = y t^{-1}.
  for (std::size_t y : f.support()) {
    if (auto x = s.mul(y, t_inv)) {
      out.function[*x] = f[y];
    } else {
      out.truncated = true;
    }
  }
  return out;
}

}  // namespace aphi
