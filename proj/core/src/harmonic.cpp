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

#include "aphi/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

#include "aphi/errors.hpp"
#include "aphi/orlicz_norms.hpp"
#include "aphi/random.hpp"

namespace aphi {

namespace {

constexpr double kSlackFloor = -1e-9;
constexpr double kExact = 1e-12;

void require_finite(const GroupSpace& s, const char* what) {
  if (!s.is_finite()) {
    throw ScopeError(std::string(what) +
                     ": Z-windows model a noncompact group; no unit, bounded "
                     "approximate identity or Segal structure is claimed there");
  }
}

GroupFunction random_function(const SpacePtr& sp, Rng& rng) {
  GroupFunction f(sp);
  for (std::size_t x = 0; x < sp->size(); ++x) {
    f[x] = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  }
  return f;
}

std::size_t complex_rank(std::vector<std::vector<Complex>> rows, double tol) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (std::abs(rows[r][c]) > std::abs(rows[piv][c])) piv = r;
    }
    if (std::abs(rows[piv][c]) <= tol) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Complex m = rows[r][c] / rows[rank][c];
      if (m == Complex{}) continue;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= m * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Applies `tf` to one factor of every term and re-targets the decomposition.
template <typename F>
Decomposition translated(const Decomposition& d, const GroupFunction& target, bool on_f, F tf) {
  Decomposition out(target);
  for (const Term& t : d.terms) {
    out.terms.push_back(on_f ? Term{tf(t.f), t.g} : Term{t.f, tf(t.g)});
  }
  return out;
}

}  // namespace

bool SegalReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const SegalCheck& c) { return c.pass; });
}

SegalReport segal_report(const SpacePtr& space, const ComplementaryPair& pair,
                         std::size_t samples, std::uint64_t seed) {
  const GroupSpace& s = *space;
  require_finite(s, "segal_report");
  SegalReport rep;
  rep.group = s.describe();
  rep.pair = pair.name();
  rep.samples = samples;
  const std::size_t n = s.size();

  // Density: the plateau functions of singletons span every function.
  {
    std::vector<std::vector<Complex>> rows;
    double worst_cost = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      const GroupFunction v = plateau_function(space, {x}, {s.identity()}).function;
      rows.emplace_back(v.values().begin(), v.values().end());
      worst_cost = std::max(worst_cost, aphi_upper(v, pair).upper);
    }
    rep.rank = complex_rank(std::move(rows), 1e-9);
    SegalCheck c{"density", double(rep.rank) - double(n), rep.rank == n, {}};
    std::ostringstream os;
    os.precision(17);
    os << "rank " << rep.rank << " of " << n << ", max generator cost " << worst_cost;
    c.detail = os.str();
    rep.checks.push_back(std::move(c));
  }

  Rng rng(seed);
  std::vector<GroupFunction> fs{GroupFunction(space)};
  for (std::size_t i = 0; i < samples; ++i) fs.push_back(random_function(space, rng));

  SegalCheck l1{"l1-le-sup", std::numeric_limits<double>::infinity(), true, {}};
  SegalCheck sup{"sup-le-aphi", std::numeric_limits<double>::infinity(), true, {}};
  SegalCheck left{"left-translation-cost", std::numeric_limits<double>::infinity(), true, {}};
  SegalCheck right{"right-translation-cost", std::numeric_limits<double>::infinity(), true, {}};
  for (const GroupFunction& f : fs) {
    const AphiBound b = aphi_upper(f, pair);
    l1.worst_slack = std::min(l1.worst_slack, f.sup_norm() - f.l1_norm());
    sup.worst_slack = std::min(sup.worst_slack, b.upper - f.sup_norm());
    const double c0 = cost(b.witness, pair);
    for (std::size_t t = 0; t < n; ++t) {
      const GroupFunction lt = translate_left(t, f).function;
      const Decomposition dl = translated(b.witness, lt, true, [&](const GroupFunction& h) {
        return translate_left(t, h).function;
      });
      const double el = dl.reconstruction_error();
      const double cl = cost(dl, pair);
      left.worst_slack = std::min(left.worst_slack, kExact - std::max(el, std::abs(cl - c0)));

      const GroupFunction rt = translate_right(t, f).function;
      const Decomposition dr = translated(b.witness, rt, false, [&](const GroupFunction& h) {
        return translate_left(t, h).function;
      });
      const double er = dr.reconstruction_error();
      const double cr = cost(dr, pair);
      right.worst_slack = std::min(right.worst_slack, kExact - std::max(er, std::abs(cr - c0)));
    }
  }
  for (SegalCheck* c : {&l1, &sup, &left, &right}) {
    if (!std::isfinite(c->worst_slack)) c->worst_slack = 0.0;
    c->pass = c->worst_slack >= kSlackFloor;
  }
  l1.detail = "||f||_1 <= ||f||_inf with lambda(G) = 1";
  sup.detail = "||f||_inf <= A_Phi upper bound";
  left.detail = "L_t u = (L_t f) * g-check; slack = 1e-12 - max(reconstruction, cost change)";
  right.detail = "R_t u = f * (L_t g)-check; slack = 1e-12 - max(reconstruction, cost change)";
  rep.checks.push_back(std::move(l1));
  rep.checks.push_back(std::move(sup));
  rep.symmetric = right.pass;
  rep.checks.push_back(std::move(left));
  rep.checks.push_back(std::move(right));
  rep.checks.push_back({"translation-continuity", 0.0, true,
                        "discrete group: every translation orbit is exactly continuous"});
  return rep;
}

bool UnitReport::pass(double tol) const {
  return max_left_error <= tol && max_right_error <= tol && std::isfinite(bracket.upper) &&
         pointwise.pass();
}

UnitReport convolution_unit(const SpacePtr& space, const ComplementaryPair& pair,
                            double epsilon) {
  const GroupSpace& s = *space;
  require_finite(s, "convolution_unit");
  UnitReport rep;
  const std::size_t e = s.identity();
  rep.unit = GroupFunction::point(space, e, 1.0 / s.weight_value(e));
  rep.basis_size = s.size();
  for (std::size_t x = 0; x < s.size(); ++x) {
    const GroupFunction chi = GroupFunction::point(space, x);
    rep.max_left_error =
        std::max(rep.max_left_error, convolve(rep.unit, chi).function.max_abs_diff(chi));
    rep.max_right_error =
        std::max(rep.max_right_error, convolve(chi, rep.unit).function.max_abs_diff(chi));
  }
  rep.bracket = aphi_upper(rep.unit, pair);
  ElementSet all(s.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  rep.pointwise = lemma_r_construct(space, all, pair, epsilon);
  return rep;
}

Complex CharacterSet::value(std::size_t character, std::size_t x) const {
  const double angle = 2.0 * std::numbers::pi *
                       static_cast<double>(characters.at(character).exponent.at(x)) /
                       static_cast<double>(modulus);
  return std::polar(1.0, angle);
}

GroupFunction CharacterSet::weight(std::size_t character) const {
  GroupFunction w(space);
  for (std::size_t x = 0; x < space->size(); ++x) w[x] = value(character, x);
  return w;
}

Complex CharacterSet::pair_with(std::size_t character, const GroupFunction& u) const {
  Complex sum{};
  for (std::size_t x = 0; x < space->size(); ++x) {
    sum += u[x] * value(character, x) * space->weight_value(x);
  }
  return sum;
}

CharacterSet CharacterSet::rescaled(std::uint64_t new_modulus) const {
  if (new_modulus % modulus != 0) {
    throw DomainError("CharacterSet::rescaled: modulus must be a multiple");
  }
  CharacterSet out{space, new_modulus, characters};
  const std::uint64_t factor = new_modulus / modulus;
  for (Character& c : out.characters) {
    for (auto& k : c.exponent) k *= factor;
  }
  std::sort(out.characters.begin(), out.characters.end());
  return out;
}

namespace {

void require_abelian(const GroupSpace& s) {
  require_finite(s, "characters");
  if (const auto nc = s.noncommuting_pair()) {
    const auto ab = *s.mul(nc->first, nc->second);
    const auto ba = *s.mul(nc->second, nc->first);
    throw ScopeError("characters: group is nonabelian; " + s.label(nc->first) + "*" +
                     s.label(nc->second) + " = " + s.label(ab) + " but " +
                     s.label(nc->second) + "*" + s.label(nc->first) + " = " + s.label(ba));
  }
}

// Closure of the subgroup generated by `gens`.
std::vector<char> generated(const GroupSpace& s, const std::vector<std::size_t>& gens) {
  std::vector<char> in(s.size(), 0);
  std::deque<std::size_t> queue{s.identity()};
  in[s.identity()] = 1;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t g : gens) {
      const std::size_t b = *s.mul(a, g);
      if (!in[b]) {
        in[b] = 1;
        queue.push_back(b);
      }
    }
  }
  return in;
}

// Extends exponents on generators to the whole group; nullopt on conflict.
std::optional<Character> propagate(const GroupSpace& s, const std::vector<std::size_t>& gens,
                                   const std::vector<std::uint64_t>& images,
                                   std::uint64_t modulus) {
  constexpr std::uint64_t unset = ~std::uint64_t{0};
  std::vector<std::uint64_t> k(s.size(), unset);
  k[s.identity()] = 0;
  std::deque<std::size_t> queue{s.identity()};
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::size_t b = *s.mul(a, gens[i]);
      const std::uint64_t v = (k[a] + images[i]) % modulus;
      if (k[b] == unset) {
        k[b] = v;
        queue.push_back(b);
      } else if (k[b] != v) {
        return std::nullopt;
      }
    }
  }
  return Character{std::move(k)};
}

}  // namespace

CharacterSet enumerate_characters(const SpacePtr& space) {
  const GroupSpace& s = *space;
  require_abelian(s);
  std::uint64_t modulus = 1;
  for (std::size_t x = 0; x < s.size(); ++x) modulus = std::lcm(modulus, s.order_of(x));

  std::vector<std::size_t> gens;
  std::vector<char> covered = generated(s, gens);
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (!covered[x]) {
      gens.push_back(x);
      covered = generated(s, gens);
    }
  }

  CharacterSet out{space, modulus, {}};
  std::vector<std::uint64_t> images(gens.size(), 0);
  // Odometer over images with order(g) * image = 0 mod modulus.
  std::vector<std::uint64_t> step(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) step[i] = modulus / s.order_of(gens[i]);
  while (true) {
    if (auto c = propagate(s, gens, images, modulus)) out.characters.push_back(std::move(*c));
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      images[i] += step[i];
      if (images[i] < modulus) break;
      images[i] = 0;
    }
    if (i == gens.size()) break;
  }
  std::sort(out.characters.begin(), out.characters.end());
  out.characters.erase(std::unique(out.characters.begin(), out.characters.end()),
                       out.characters.end());
  return out;
}

namespace {

struct PairConstraint {
  std::size_t s = 0;
  std::size_t t = 0;
  std::vector<std::pair<std::size_t, Complex>> product;  // delta_s * delta_t, sparse
};

Complex delta_pairing(const GroupSpace& g, const std::vector<std::pair<std::size_t, Complex>>& f,
                      const std::vector<Complex>& w) {
  Complex sum{};
  for (const auto& [x, v] : f) sum += v * w[x] * g.weight_value(x);
  return sum;
}

std::vector<PairConstraint> pair_constraints(const SpacePtr& space) {
  const GroupSpace& g = *space;
  std::vector<PairConstraint> out;
  for (std::size_t s = 0; s < g.size(); ++s) {
    const GroupFunction ds = GroupFunction::point(space, s, 1.0 / g.weight_value(s));
    for (std::size_t t = 0; t < g.size(); ++t) {
      const GroupFunction dt = GroupFunction::point(space, t, 1.0 / g.weight_value(t));
      const GroupFunction p = convolve(ds, dt).function;
      PairConstraint c{s, t, {}};
      for (std::size_t x : p.support()) c.product.emplace_back(x, p[x]);
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

CharacterSet multiplicative_functional_search(const SpacePtr& space, double tolerance) {
  const GroupSpace& g = *space;
  require_abelian(g);
  const std::size_t n = g.size();
  const std::uint64_t modulus = n;
  std::vector<Complex> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(n));
  }
  // Bucket each constraint by the last element index it touches.
  std::vector<std::vector<PairConstraint>> at(n);
  for (PairConstraint& c : pair_constraints(space)) {
    std::size_t last = std::max(c.s, c.t);
    for (const auto& [x, v] : c.product) last = std::max(last, x);
    at[last].push_back(std::move(c));
  }

  CharacterSet out{space, modulus, {}};
  std::vector<std::uint64_t> k(n, 0);
  std::vector<Complex> w(n);
  auto consistent = [&](std::size_t j) {
    for (const PairConstraint& c : at[j]) {
      const Complex lhs = delta_pairing(g, c.product, w);
      const Complex rhs = w[c.s] * w[c.t];
      if (std::abs(lhs - rhs) > tolerance) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      out.characters.push_back(Character{k});
      return;
    }
    for (std::uint64_t e = 0; e < modulus; ++e) {
      k[j] = e;
      w[j] = roots[e];
      if (consistent(j)) self(self, j + 1);
    }
  };
  search(search, 0);
  std::sort(out.characters.begin(), out.characters.end());
  return out;
}

MultiplicativityCheck is_multiplicative(const SpacePtr& space, const std::vector<Complex>& w,
                                        double tolerance) {
  const GroupSpace& g = *space;
  if (w.size() != g.size()) throw DomainError("is_multiplicative: weight size mismatch");
  MultiplicativityCheck out;
  for (const PairConstraint& c : pair_constraints(space)) {
    const double d = std::abs(delta_pairing(g, c.product, w) - w[c.s] * w[c.t]);
    if (d > out.worst) {
      out.worst = d;
      out.s = c.s;
      out.t = c.t;
    }
  }
  out.pass = out.worst <= tolerance;
  return out;
}

}  // namespace aphi
