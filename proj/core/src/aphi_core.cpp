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

#include "aphi/aphi_core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "aphi/errors.hpp"

namespace aphi {

FlaggedFunction Decomposition::reconstruct() const {
  FlaggedFunction sum{GroupFunction(target.space_ptr())};
  for (const Term& t : terms) {
    FlaggedFunction c = convolve(t.f, check(t.g));
    sum.function += c.function;
    sum.truncated = sum.truncated || c.truncated;
  }
  return sum;
}

double Decomposition::reconstruction_error() const {
  const FlaggedFunction r = reconstruct();
  if (r.truncated) return std::numeric_limits<double>::infinity();
  return r.function.max_abs_diff(target);
}

bool Decomposition::valid() const {
  return reconstruction_error() <= 1e-9 * (1.0 + target.sup_norm());
}

double term_cost(const Term& t, const ComplementaryPair& pair, CostMode mode) {
  if (t.f.is_zero() || t.g.is_zero()) return 0.0;
  const double nf = luxemburg(pair.phi(), t.f).value;
  const double ng = mode == CostMode::mixed
                        ? orlicz_norm(pair.swapped(), t.g, {.cross_check = false}).value
                        : luxemburg(pair.psi(), t.g).value;
  return nf * ng;
}

double cost(const Decomposition& d, const ComplementaryPair& pair, CostMode mode) {
  if (!d.valid()) {
    throw DomainError("cost: decomposition does not reconstruct its target (error " +
                      std::to_string(d.reconstruction_error()) + ")");
  }
  double c = 0.0;
  for (const Term& t : d.terms) c += term_cost(t, pair, mode);
  return c;
}

Decomposition atomic_decomposition(const GroupFunction& u) {
  Decomposition d(u);
  const GroupSpace& s = u.space();
  const GroupFunction delta_e = GroupFunction::point(u.space_ptr(), s.identity());
  for (std::size_t t : u.support()) {
    d.terms.push_back(
        {GroupFunction::point(u.space_ptr(), t, u[t] / s.weight_value(t)), delta_e});
  }
  return d;
}

FlaggedFunction plateau_function(const SpacePtr& space, const ElementSet& e,
                                 const ElementSet& f) {
  if (e.empty() || f.empty()) throw DomainError("plateau_function: empty set");
  const SetProduct ef = product_set(*space, e, f);
  FlaggedFunction v = convolve(GroupFunction::indicator(space, ef.set),
                               check(GroupFunction::indicator(space, f)));
  v.function *= 1.0 / space->measure(f);
  v.truncated = v.truncated || ef.truncated;
  return v;
}

namespace {

Decomposition merge_equal_g(const Decomposition& d) {
  Decomposition out(d.target);
  for (const Term& t : d.terms) {
    auto it = std::find_if(out.terms.begin(), out.terms.end(), [&](const Term& o) {
      return o.g.max_abs_diff(t.g) == 0.0;
    });
    if (it == out.terms.end()) {
      out.terms.push_back(t);
    } else {
      it->f += t.f;
    }
  }
  return out;
}

Decomposition rebalance(const Decomposition& d, const ComplementaryPair& pair) {
  Decomposition out(d.target);
  for (const Term& t : d.terms) {
    const double nf = luxemburg(pair.phi(), t.f).value;
    const double ng = luxemburg(pair.psi(), t.g).value;
    if (nf == 0.0 || ng == 0.0) continue;
    const double s = std::sqrt(ng / nf);
    out.terms.push_back({t.f * Complex(s), t.g * Complex(1.0 / s)});
  }
  return out;
}

Decomposition identity_pair(const GroupFunction& u) {
  const GroupSpace& s = u.space();
  const std::size_t e = s.identity();
  return Decomposition(
      {Term{GroupFunction::point(u.space_ptr(), e, 1.0 / s.weight_value(e)), check(u)}}, u);
}

// Plateau pair for a given B: A = P B with P the set where u attains its
// largest value c, and u ?= c chi_A * (chi_B / lambda(B))-check.
std::optional<Decomposition> plateau_pair(const GroupFunction& u, const ElementSet& b) {
  const GroupSpace& s = u.space();
  std::size_t x0 = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (std::abs(u[i]) > std::abs(u[x0])) x0 = i;
  }
  const Complex c = u[x0];
  ElementSet plateau;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (std::abs(u[i] - c) <= 1e-12 * (1.0 + std::abs(c))) plateau.push_back(i);
  }
  const SetProduct a = product_set(s, plateau, b);
  if (a.truncated) return std::nullopt;
  Decomposition d(
      {Term{GroupFunction::indicator(u.space_ptr(), a.set) * c,
            GroupFunction::indicator(u.space_ptr(), b) * Complex(1.0 / s.measure(b))}},
      u);
  if (!d.valid()) return std::nullopt;
  return d;
}

std::vector<ElementSet> plateau_candidates(const GroupSpace& s) {
  std::vector<ElementSet> out;
  out.push_back({s.identity()});
  if (s.is_finite()) {
    ElementSet all(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) all[i] = i;
    out.push_back(std::move(all));
  } else {
    for (std::int64_t n = 1; n <= s.window_radius(); ++n) out.push_back(s.interval(-n, n));
  }
  return out;
}

}  // namespace

AphiBound aphi_upper(const GroupFunction& u, const ComplementaryPair& pair,
                     const AphiOptions& options) {
  AphiBound best{0.0, u.sup_norm(), Decomposition(u), "zero", 0};
  if (u.is_zero()) return best;

  bool have = false;
  auto consider = [&](const Decomposition& d, const std::string& origin) {
    if (!d.valid()) return;
    const double c = cost(d, pair, options.mode);
    if (!have || c < best.upper) {
      best.upper = c;
      best.witness = d;
      best.witness_origin = origin;
      have = true;
    }
  };

  for (std::size_t i = 0; i < options.hints.size(); ++i) {
    consider(options.hints[i], "hint-" + std::to_string(i));
  }
  consider(atomic_decomposition(u), "atomic");

  std::vector<std::function<void()>> moves;
  moves.push_back([&] { consider(merge_equal_g(best.witness), "merge"); });
  moves.push_back([&] { consider(rebalance(best.witness, pair), "rebalance"); });
  moves.push_back([&] { consider(identity_pair(u), "identity-pair"); });
  const GroupSpace& s = u.space();
  const std::vector<ElementSet> bs = plateau_candidates(s);
  for (const ElementSet& b : bs) {
    moves.push_back([&, b] {
      if (auto d = plateau_pair(u, b)) {
        consider(*d, "plateau(|B|=" + std::to_string(b.size()) + ")");
      }
    });
  }
  for (std::size_t i = 0; i < moves.size() && best.moves < options.budget; ++i) {
    moves[i]();
    ++best.moves;
  }
  return best;
}

double InequalityStep::slack() const {
  if (relation == Relation::equal) {
    return tolerance * (1.0 + std::abs(rhs)) - std::abs(lhs - rhs);
  }
  return rhs - lhs + tolerance * (1.0 + std::abs(rhs));
}

bool InequalityStep::holds() const {
  return relation == Relation::less ? slack() > 0.0 : slack() >= 0.0;
}

std::string to_string(InequalityStep::Relation r) {
  switch (r) {
    case InequalityStep::Relation::less:
      return "<";
    case InequalityStep::Relation::less_equal:
      return "<=";
    case InequalityStep::Relation::equal:
      return "=";
  }
  return "?";
}

namespace {

// The bound chain of the plateau lemma for one side of the pair.
// Orlicz <= 2 Luxemburg is an equality on indicators for the quadratic
// pair, so the computed sides may differ in the last bits either way.
constexpr double kTightRounding = 1e-12;

std::vector<InequalityStep> lemma_chain(const ComplementaryPair& pair,
                                        const GroupSpace& space, const ElementSet& ev,
                                        const ElementSet& v, double epsilon,
                                        double witness_cost, const SpacePtr& sp) {
  using R = InequalityStep::Relation;
  const NFunction& phi = pair.phi();
  const NFunction& psi = pair.psi();
  const double lv = space.measure(v);
  const double lev = space.measure(ev);
  std::vector<InequalityStep> chain;

  const double n_phi_ev = luxemburg(phi, GroupFunction::indicator(sp, ev)).value;
  const double n_psi_v = luxemburg(psi, GroupFunction::indicator(sp, v)).value;
  const double b1 = 2.0 / lv * n_phi_ev * n_psi_v;
  chain.push_back({"orlicz<=2*luxemburg: cost <= (2/l(V)) N_phi(chi_EV) N_psi(chi_V)",
                   witness_cost, b1, R::less_equal, kTightRounding});

  const double b2 = 2.0 / lv / (inverse(phi, 1.0 / lev) * inverse(psi, 1.0 / lv));
  chain.push_back({"char-fn closed form: = (2/l(V)) / (phi^-1(1/l(EV)) psi^-1(1/l(V)))",
                   b1, b2, R::equal, 1e-10});

  const double s = 1.0 / ((1.0 + epsilon) * lv);
  const double b3 = 2.0 / lv / (inverse(phi, s) * inverse(psi, s));
  chain.push_back({"leptin l(EV) < (1+eps) l(V): <= (2/l(V)) / (phi^-1(s) psi^-1(s))",
                   b2, b3, R::less_equal, 0.0});

  chain.push_back({"inverse product > s: < 2(1+eps)", b3, 2.0 * (1.0 + epsilon),
                   R::less, 0.0});
  return chain;
}

}  // namespace

bool LemmaCertificate::pass() const {
  const double bound = 2.0 * (1.0 + epsilon);
  if (!unit_on_e() || !in_unit_interval() || !support_ok) return false;
  if (!(cost_phi < bound) || !(cost_psi < bound)) return false;
  for (const auto& s : chain_phi)
    if (!s.holds()) return false;
  for (const auto& s : chain_psi)
    if (!s.holds()) return false;
  return true;
}

LemmaCertificate lemma_r_construct(const SpacePtr& space, const ElementSet& e_in,
                                   const ComplementaryPair& pair, double epsilon) {
  const ElementSet e = normalize_set(e_in);
  LeptinSet leptin = leptin_search(*space, e, epsilon);
  const SetProduct ev = product_set(*space, e, leptin.set);
  if (ev.truncated) throw InfeasibleError("lemma_r_construct: EV leaves the window");

  const GroupFunction f = GroupFunction::indicator(space, ev.set);
  const GroupFunction g =
      GroupFunction::indicator(space, leptin.set) * Complex(1.0 / leptin.measure);
  const FlaggedFunction u = convolve(f, check(g));
  if (u.truncated) throw InfeasibleError("lemma_r_construct: u leaves the window");

  LemmaCertificate cert{u.function,
                        Decomposition({Term{f, g}}, u.function),
                        std::move(leptin),
                        ev.set,
                        {},
                        epsilon,
                        0.0,
                        0.0,
                        0.0,
                        0.0,
                        false,
                        0.0,
                        0.0,
                        {},
                        {}};
  const SetProduct bound =
      product_set(*space, ev.set, inverse_set(*space, cert.leptin.set));
  cert.support_bound = bound.set;

  cert.min_value = std::numeric_limits<double>::infinity();
  cert.max_value = -std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < cert.u.size(); ++x) {
    cert.min_value = std::min(cert.min_value, cert.u[x].real());
    cert.max_value = std::max(cert.max_value, cert.u[x].real());
    cert.max_imaginary = std::max(cert.max_imaginary, std::abs(cert.u[x].imag()));
  }
  for (std::size_t x : e) {
    cert.max_deviation_on_e = std::max(cert.max_deviation_on_e, std::abs(cert.u[x] - 1.0));
  }
  const ElementSet supp = cert.u.support();
  cert.support_ok = std::includes(cert.support_bound.begin(), cert.support_bound.end(),
                                  supp.begin(), supp.end());

  cert.cost_phi = cost(cert.witness, pair);
  cert.cost_psi = cost(cert.witness, pair.swapped());
  cert.chain_phi = lemma_chain(pair, *space, cert.ev, cert.leptin.set, epsilon,
                               cert.cost_phi, space);
  cert.chain_psi = lemma_chain(pair.swapped(), *space, cert.ev, cert.leptin.set,
                               epsilon, cert.cost_psi, space);
  return cert;
}

bool SubmultReport::pass(double slack_floor) const {
  return std::all_of(steps.begin(), steps.end(),
                     [&](const InequalityStep& s) { return s.slack() >= slack_floor; });
}

SubmultReport convolution_submultiplicativity(const GroupFunction& u,
                                              const GroupFunction& v,
                                              const ComplementaryPair& pair,
                                              std::size_t budget) {
  if (!u.space().is_finite()) {
    throw ScopeError(
        "convolution_submultiplicativity needs a finite normalized group; on "
        "noncompact groups the convolution of two A_Phi elements need not exist");
  }
  using R = InequalityStep::Relation;
  const SpacePtr& sp = u.space_ptr();
  SubmultReport r;
  r.alpha = 1.0 / inverse(pair.phi(), 1.0);
  r.beta = orlicz_norm(pair.swapped(), GroupFunction::constant(sp, 1.0),
                       {.cross_check = false})
               .value;

  const GroupFunction uv = convolve(u, v).function;
  const GroupFunction v_check = check(v);
  AphiOptions opts;
  opts.budget = budget;
  opts.hints.push_back(Decomposition({Term{u, v_check}}, uv));
  r.upper_uv = aphi_upper(uv, pair, opts).upper;
  r.single_pair = u.is_zero() || v.is_zero()
                      ? 0.0
                      : luxemburg(pair.phi(), u).value *
                            orlicz_norm(pair.swapped(), v_check, {.cross_check = false})
                                .value;
  r.outer = r.alpha * r.beta * u.sup_norm() * v.sup_norm();
  AphiOptions plain;
  plain.budget = budget;
  r.algebra_bound = r.alpha * r.beta * aphi_upper(u, pair, plain).upper *
                    aphi_upper(v, pair, plain).upper;

  r.steps.push_back({"aphi_upper(u*v) <= N_phi(u) ||v-check||_psi", r.upper_uv,
                     r.single_pair, R::less_equal, 0.0});
  r.steps.push_back({"N_phi(u) ||v-check||_psi <= alpha beta ||u||_inf ||v||_inf",
                     r.single_pair, r.outer, R::less_equal, 0.0});
  r.steps.push_back({"alpha beta ||u||_inf ||v||_inf <= alpha beta |u|_A |v|_A",
                     r.outer, r.algebra_bound, R::less_equal, 0.0});
  return r;
}

}  // namespace aphi
