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

#include "aphi/group_space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "aphi/errors.hpp"
#include "aphi/random.hpp"

namespace aphi {

void GroupSpace::index_labels() {
  by_label_.clear();
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!by_label_.emplace(labels_[i], i).second) {
      throw DomainError("duplicate element label '" + labels_[i] + "'");
    }
  }
}

SpacePtr GroupSpace::cyclic(std::size_t n) {
  if (n == 0) throw DomainError("Z_n needs n >= 1");
  std::shared_ptr<GroupSpace> g(new GroupSpace());
  g->kind_ = GroupKind::cyclic;
  g->modulus_ = n;
  g->weight_ = Rational{1, static_cast<std::int64_t>(n)};
  g->labels_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g->labels_.push_back(std::to_string(i));
  g->index_labels();
  return g;
}

SpacePtr GroupSpace::window(std::int64_t radius) {
  if (radius < 0) throw DomainError("Z-window needs radius >= 0");
  std::shared_ptr<GroupSpace> g(new GroupSpace());
  g->kind_ = GroupKind::window;
  g->radius_ = radius;
  g->identity_ = static_cast<std::size_t>(radius);
  g->weight_ = Rational{1, 1};
  for (std::int64_t x = -radius; x <= radius; ++x) g->labels_.push_back(std::to_string(x));
  g->index_labels();
  return g;
}

SpacePtr GroupSpace::product(std::vector<SpacePtr> factors) {
  if (factors.empty()) throw DomainError("product needs at least one factor");
  std::size_t n = 1;
  for (const auto& f : factors) {
    if (!f) throw DomainError("null product factor");
    if (f->is_window()) throw ScopeError("products of Z-windows are not supported");
    n *= f->size();
  }
  std::shared_ptr<GroupSpace> g(new GroupSpace());
  g->kind_ = GroupKind::product;
  g->factors_ = std::move(factors);
  g->weight_ = Rational{1, static_cast<std::int64_t>(n)};
  g->labels_.resize(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    std::vector<std::string> parts(g->factors_.size());
    for (std::size_t k = g->factors_.size(); k-- > 0;) {
      const std::size_t sz = g->factors_[k]->size();
      parts[k] = g->factors_[k]->label(rest % sz);
      rest /= sz;
    }
    std::string s = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "," : "") + parts[k];
    g->labels_[idx] = s + ")";
  }
  std::size_t id = 0;
  for (const auto& f : g->factors_) id = id * f->size() + f->identity();
  g->identity_ = id;
  g->index_labels();
  return g;
}

SpacePtr GroupSpace::table(std::vector<std::string> labels,
                           std::vector<std::vector<std::size_t>> mul,
                           std::size_t identity, std::vector<std::size_t> inverse) {
  const std::size_t n = labels.size();
  if (n == 0) throw DomainError("group table is empty");
  if (mul.size() != n) throw DomainError("group table must have one row per element");
  for (const auto& row : mul) {
    if (row.size() != n) throw DomainError("group table rows must have one entry per element");
    for (std::size_t v : row) {
      if (v >= n) throw DomainError("group table entry out of range (not closed)");
    }
  }
  if (identity >= n) throw DomainError("identity out of range");
  for (std::size_t a = 0; a < n; ++a) {
    if (mul[identity][a] != a || mul[a][identity] != a) {
      throw DomainError("identity law fails for '" + labels[a] + "'");
    }
  }
  if (inverse.empty()) {
    inverse.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (mul[a][b] == identity && mul[b][a] == identity) {
          inverse[a] = b;
          break;
        }
      }
      if (inverse[a] == n) throw DomainError("'" + labels[a] + "' has no inverse");
    }
  } else {
    if (inverse.size() != n) throw DomainError("inverse list must cover every element");
    for (std::size_t a = 0; a < n; ++a) {
      if (inverse[a] >= n || mul[a][inverse[a]] != identity ||
          mul[inverse[a]][a] != identity) {
        throw DomainError("inverse law fails for '" + labels[a] + "'");
      }
    }
  }
  std::shared_ptr<GroupSpace> g(new GroupSpace());
  g->kind_ = GroupKind::table;
  g->labels_ = std::move(labels);
  g->table_ = std::move(mul);
  g->inverse_ = std::move(inverse);
  g->identity_ = identity;
  g->weight_ = Rational{1, static_cast<std::int64_t>(n)};
  g->index_labels();
  const AxiomReport r = check_group_axioms(*g);
  if (!r.pass) throw DomainError("group table rejected: " + r.detail);
  return g;
}

SpacePtr GroupSpace::symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw DomainError("symmetric(n) supports 1 <= n <= 5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(
        std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  const std::size_t m = perms.size();
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> mul(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    std::string s;
    for (std::size_t v : perms[a]) s += std::to_string(v);
    labels.push_back(s);
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      mul[a][b] = index_of(c);
    }
  }
  return table(std::move(labels), std::move(mul), 0);
}

std::optional<std::size_t> GroupSpace::mul(std::size_t a, std::size_t b) const {
  switch (kind_) {
    case GroupKind::cyclic:
      return (a + b) % modulus_;
    case GroupKind::window: {
      const std::int64_t s = integer_at(a) + integer_at(b);
      return window_index(s);
    }
    case GroupKind::product: {
      std::size_t out = 0;
      std::size_t stride = 1;
      for (std::size_t k = factors_.size(); k-- > 0;) {
        const auto& f = *factors_[k];
        const std::size_t sz = f.size();
        const std::size_t ca = (a / stride) % sz;
        const std::size_t cb = (b / stride) % sz;
        out += *f.mul(ca, cb) * stride;
        stride *= sz;
      }
      return out;
    }
    case GroupKind::table:
      return table_[a][b];
  }
  return std::nullopt;
}

std::size_t GroupSpace::inv(std::size_t a) const {
  switch (kind_) {
    case GroupKind::cyclic:
      return (modulus_ - a % modulus_) % modulus_;
    case GroupKind::window:
      return size() - 1 - a;
    case GroupKind::product: {
      std::size_t out = 0;
      std::size_t stride = 1;
      for (std::size_t k = factors_.size(); k-- > 0;) {
        const auto& f = *factors_[k];
        const std::size_t sz = f.size();
        out += f.inv((a / stride) % sz) * stride;
        stride *= sz;
      }
      return out;
    }
    case GroupKind::table:
      return inverse_[a];
  }
  return a;
}

Rational GroupSpace::total_measure() const {
  if (!is_finite()) throw ScopeError("a Z-window has no finite total Haar measure");
  return Rational{1, 1};
}

double GroupSpace::measure(const ElementSet& set) const {
  return static_cast<double>(set.size()) * weight_.value();
}

std::optional<std::size_t> GroupSpace::find(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::int64_t GroupSpace::integer_at(std::size_t i) const {
  if (kind_ == GroupKind::window) return static_cast<std::int64_t>(i) - radius_;
  if (kind_ == GroupKind::cyclic) return static_cast<std::int64_t>(i);
  throw ScopeError("integer coordinates exist only on Z_n and Z-windows");
}

std::optional<std::size_t> GroupSpace::window_index(std::int64_t n) const {
  if (kind_ != GroupKind::window) throw ScopeError("window_index on a finite group");
  if (n < -radius_ || n > radius_) return std::nullopt;
  return static_cast<std::size_t>(n + radius_);
}

ElementSet GroupSpace::interval(std::int64_t lo, std::int64_t hi) const {
  ElementSet out;
  for (std::int64_t x = lo; x <= hi; ++x) {
    auto i = window_index(x);
    if (!i) {
      throw InfeasibleError("interval [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "] leaves the window of radius " +
                            std::to_string(radius_));
    }
    out.push_back(*i);
  }
  return out;
}

std::string GroupSpace::describe() const {
  switch (kind_) {
    case GroupKind::cyclic:
      return "Z" + std::to_string(modulus_);
    case GroupKind::window:
      return "Zwindow(" + std::to_string(radius_) + ")";
    case GroupKind::product: {
      std::string s;
      for (std::size_t k = 0; k < factors_.size(); ++k) {
        s += (k ? "x" : "") + factors_[k]->describe();
      }
      return s;
    }
    case GroupKind::table:
      return "table(" + std::to_string(size()) + ")";
  }
  return "?";
}

std::optional<std::pair<std::size_t, std::size_t>> GroupSpace::noncommuting_pair() const {
  if (kind_ == GroupKind::cyclic || kind_ == GroupKind::window) return std::nullopt;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (mul(a, b) != mul(b, a)) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

std::size_t GroupSpace::order_of(std::size_t a) const {
  if (!is_finite()) throw ScopeError("element orders are only defined on finite groups");
  std::size_t k = 1;
  std::size_t x = a;
  while (x != identity_) {
    x = *mul(x, a);
    ++k;
  }
  return k;
}

AxiomReport check_group_axioms(const GroupSpace& g, std::uint64_t seed,
                               std::size_t samples) {
  AxiomReport r;
  const std::size_t n = g.size();
  const std::size_t e = g.identity();
  auto fail = [&](const std::string& what, std::size_t a, std::size_t b, std::size_t c) {
    r.pass = false;
    r.detail = what + " at (" + g.label(a) + ", " + g.label(b) + ", " + g.label(c) + ")";
  };
  auto triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    ++r.triples;
    const auto ab = g.mul(a, b);
    const auto bc = g.mul(b, c);
    if (!ab || !bc) return true;
    const auto l = g.mul(*ab, c);
    const auto rr = g.mul(a, *bc);
    if (!l || !rr) return true;
    if (*l != *rr) {
      fail("associativity fails", a, b, c);
      return false;
    }
    return true;
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (g.mul(e, a) != a || g.mul(a, e) != a) {
      fail("identity law fails", e, a, e);
      return r;
    }
    if (g.mul(a, g.inv(a)) != e || g.mul(g.inv(a), a) != e) {
      fail("inverse law fails", a, g.inv(a), e);
      return r;
    }
  }
  if (n <= 64) {
    r.exhaustive = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!triple(a, b, c)) return r;
  } else {
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      if (!triple(rng.below(n), rng.below(n), rng.below(n))) return r;
    }
  }
  // Left invariance of the weights: lambda({tx}) = lambda({x}).
  const std::size_t probes = std::min<std::size_t>(n, 64);
  for (std::size_t t = 0; t < probes; ++t) {
    for (std::size_t x = 0; x < probes; ++x) {
      const auto tx = g.mul(t, x);
      if (tx && !(g.weight(*tx) == g.weight(x))) {
        fail("Haar weight not left invariant", t, x, *tx);
        return r;
      }
    }
  }
  return r;
}

ElementSet normalize_set(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

SetProduct product_set(const GroupSpace& g, const ElementSet& a, const ElementSet& b) {
  SetProduct out;
  std::vector<char> hit(g.size(), 0);
  for (std::size_t x : a) {
    for (std::size_t y : b) {
      if (auto p = g.mul(x, y)) {
        hit[*p] = 1;
      } else {
        out.truncated = true;
      }
    }
  }
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) out.set.push_back(i);
  }
  return out;
}

ElementSet inverse_set(const GroupSpace& g, const ElementSet& a) {
  ElementSet out;
  out.reserve(a.size());
  for (std::size_t x : a) out.push_back(g.inv(x));
  return normalize_set(std::move(out));
}

namespace {

// |K + [-N, N]| for an integer set K, computed without a window.
std::int64_t sumset_size(const std::vector<std::int64_t>& k, std::int64_t n) {
  std::int64_t total = 0;
  std::int64_t cur_lo = k.front() - n;
  std::int64_t cur_hi = k.front() + n;
  for (std::size_t i = 1; i < k.size(); ++i) {
    const std::int64_t lo = k[i] - n, hi = k[i] + n;
    if (lo <= cur_hi + 1) {
      cur_hi = std::max(cur_hi, hi);
    } else {
      total += cur_hi - cur_lo + 1;
      cur_lo = lo;
      cur_hi = hi;
    }
  }
  return total + (cur_hi - cur_lo + 1);
}

}  // namespace

LeptinSet leptin_search(const GroupSpace& g, const ElementSet& k, double epsilon) {
  if (k.empty()) throw DomainError("leptin_search: K must be nonempty");
  if (!(epsilon > 0.0)) throw DomainError("leptin_search: epsilon must be > 0");
  LeptinSet out;
  if (g.is_finite()) {
    out.set.resize(g.size());
    std::iota(out.set.begin(), out.set.end(), std::size_t{0});
    out.measure = 1.0;
    out.product_measure = 1.0;
    out.ratio = 1.0;
    out.margin = epsilon;
    return out;
  }
  std::vector<std::int64_t> ints;
  for (std::size_t i : normalize_set(k)) ints.push_back(g.integer_at(i));
  const std::int64_t w = g.window_radius();
  const std::int64_t kmin = ints.front(), kmax = ints.back();
  // Smallest N meeting the ratio on all of Z.
  std::int64_t n = 0;
  while (!(double(sumset_size(ints, n)) < (1.0 + epsilon) * double(2 * n + 1))) {
    ++n;
    if (n > (std::int64_t{1} << 40)) throw InfeasibleError("leptin_search: no interval found");
  }
  if (kmin - n < -w || kmax + n > w) {
    const std::int64_t need = std::max(kmax + n, n - kmin);
    throw InfeasibleError("leptin_search: U = [-" + std::to_string(n) + ", " +
                          std::to_string(n) + "] satisfies the ratio but KU needs a "
                          "window of radius >= " + std::to_string(need) +
                          " (have " + std::to_string(w) + ")");
  }
  out.half_width = n;
  out.set = g.interval(-n, n);
  const std::int64_t ku = sumset_size(ints, n);
  out.measure = double(2 * n + 1);
  out.product_measure = double(ku);
  out.ratio = out.product_measure / out.measure;
  out.margin = (1.0 + epsilon) - out.ratio;
  return out;
}

}  // namespace aphi
