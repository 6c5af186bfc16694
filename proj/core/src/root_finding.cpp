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

#include "aphi/root_finding.hpp"

#include <cmath>
#include <limits>

namespace aphi {

SearchResult bisect_boundary(const std::function<bool(double)>& below, double lo,
                             double hi, double rel_tol, std::size_t max_iter) {
  SearchResult out;
  while (out.iterations < max_iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (rel_tol > 0.0 && hi - lo <= rel_tol * std::abs(hi)) break;
    ++out.iterations;
    if (below(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.x = lo;
  out.width = hi - lo;
  return out;
}

Bracket expand_upper(const std::function<bool(double)>& below, double start,
                     double limit) {
  Bracket b;
  double lo = 0.0;
  double hi = start;
  while (hi < limit) {
    if (!below(hi)) {
      b.lo = lo;
      b.hi = hi;
      b.found = true;
      return b;
    }
    lo = hi;
    hi *= 2.0;
  }
  if (!below(limit)) {
    b.lo = lo;
    b.hi = limit;
    b.found = true;
    return b;
  }
  b.lo = limit;
  b.hi = std::numeric_limits<double>::infinity();
  return b;
}

SearchResult golden_minimize(const std::function<double(double)>& f, double a,
                             double b, double rel_tol, std::size_t max_iter) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  SearchResult out;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (out.iterations < max_iter && (b - a) > rel_tol * std::abs(b)) {
    ++out.iterations;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    if (c >= d) break;
  }
  out.x = fc <= fd ? c : d;
  out.width = b - a;
  return out;
}

}  // namespace aphi
