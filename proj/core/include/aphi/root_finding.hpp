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
#include <functional>

namespace aphi {

/// Outcome of a one-dimensional search.
struct SearchResult {
  double x = 0.0;
  std::size_t iterations = 0;
  double width = 0.0;  // final bracket width
};

/// Locates the boundary of a monotone predicate on [lo, hi].
///
/// Requires below(lo) == true and below(hi) == false. Bisects until the
/// bracket is narrower than rel_tol * hi or the midpoint collapses onto an
/// endpoint. Returns the largest point known to satisfy `below`.
SearchResult bisect_boundary(const std::function<bool(double)>& below, double lo,
                             double hi, double rel_tol = 0.0,
                             std::size_t max_iter = 2000);

/// Grows hi geometrically from `start` until below(hi) is false.
/// Returns the bracket [lo, hi] with below(lo) true, or hi = +inf when
/// `limit` is reached first.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  bool found = false;
};
Bracket expand_upper(const std::function<bool(double)>& below, double start,
                     double limit);

/// Golden-section minimization of a unimodal function on [a, b].
SearchResult golden_minimize(const std::function<double(double)>& f, double a,
                             double b, double rel_tol = 1e-15,
                             std::size_t max_iter = 500);

}  // namespace aphi
