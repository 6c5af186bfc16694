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

#include "aphi/suite.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>

#include "aphi/aphi_core.hpp"
#include "aphi/errors.hpp"
#include "aphi/harmonic.hpp"
#include "aphi/orlicz_norms.hpp"
#include "aphi/porosity.hpp"
#include "aphi/random.hpp"

namespace aphi {

std::vector<SpacePtr> default_battery_groups() {
  return {GroupSpace::cyclic(2),
          GroupSpace::cyclic(4),
          GroupSpace::cyclic(6),
          GroupSpace::product({GroupSpace::cyclic(2), GroupSpace::cyclic(2)}),
          GroupSpace::symmetric(3),
          GroupSpace::window(256)};
}

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
}

std::vector<SlackSummary> SuiteResult::summaries() const {
  std::map<std::string, std::vector<const SuiteCheck*>> by_name;
  for (const SuiteCheck& c : checks) by_name[c.name].push_back(&c);
  std::vector<SlackSummary> out;
  for (auto& [name, list] : by_name) {
    std::vector<double> s;
    SlackSummary sum{name, list.size(), 0};
    for (const SuiteCheck* c : list) {
      s.push_back(c->slack);
      if (!c->pass) ++sum.failed;
    }
    std::sort(s.begin(), s.end());
    auto rank = [&](double q) {
      const std::size_t i = static_cast<std::size_t>(std::ceil(q * double(s.size())));
      return s[std::min(s.size() - 1, i == 0 ? 0 : i - 1)];
    };
    sum.p0 = s.front();
    sum.p5 = rank(0.05);
    sum.p50 = rank(0.5);
    sum.p95 = rank(0.95);
    sum.p100 = s.back();
    out.push_back(sum);
  }
  return out;
}

namespace {

struct Cell {
  SpacePtr group;            // null for per-pair checks
  const ComplementaryPair* pair = nullptr;
  std::uint64_t seed = 0;
};

class CellRunner {
 public:
  CellRunner(const Cell& cell, const SuiteOptions& opt)
      : cell_(cell), opt_(opt), rng_(cell.seed) {
    floor_ = opt.zero_tolerance ? 0.0 : -1e-9;
    charfn_tol_ = opt.zero_tolerance ? 0.0 : 1e-10;
    oracle_tol_ = opt.zero_tolerance ? 0.0 : 1e-6;
  }

  std::vector<SuiteCheck> run() {
    const ComplementaryPair& pair = *cell_.pair;
    if (!cell_.group) {
      pair_checks(pair);
      return std::move(out_);
    }
    guarded("norm-chain", [&] { norm_checks(pair); });
    if (cell_.group->is_finite()) {
      guarded("finite", [&] { finite_checks(pair); });
    } else {
      guarded("window", [&] { window_checks(pair); });
    }
    return std::move(out_);
  }

 private:
  void add(std::string name, double slack, bool pass, std::string detail = {}) {
    out_.push_back({cell_.group ? cell_.group->describe() : "-", cell_.pair->name(),
                    std::move(name), slack, pass, std::move(detail)});
  }
  void ineq(std::string name, double lhs, double rhs, std::string detail = {}) {
    const double s = rhs - lhs;
    add(std::move(name), s, s >= floor_, std::move(detail));
  }
  // Relative agreement |a - b| <= tol (1 + |b|).
  void agree(std::string name, double a, double b, double tol) {
    const double s = tol * (1.0 + std::abs(b)) - std::abs(a - b);
    add(std::move(name), s, s >= 0.0,
        format_double(a) + " vs " + format_double(b));
  }
  template <typename F>
  void guarded(const std::string& name, F body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name + "-error", -std::numeric_limits<double>::infinity(), false, e.what());
    }
  }

  GroupFunction random_function(std::size_t support_radius = 0) {
    const SpacePtr& sp = cell_.group;
    GroupFunction f(sp);
    if (sp->is_finite()) {
      for (std::size_t x = 0; x < sp->size(); ++x) {
        f[x] = Complex(rng_.uniform(-2.0, 2.0), rng_.uniform(-2.0, 2.0));
      }
    } else {
      const auto r = static_cast<std::int64_t>(support_radius);
      for (std::int64_t x = -r; x <= r; ++x) {
        f[*sp->window_index(x)] = Complex(rng_.uniform(-2.0, 2.0), rng_.uniform(-2.0, 2.0));
      }
    }
    return f;
  }

  ElementSet random_subset() {
    const GroupSpace& s = *cell_.group;
    if (s.is_window()) {
      const auto lo = static_cast<std::int64_t>(rng_.below(21)) - 10;
      const auto len = static_cast<std::int64_t>(rng_.below(12));
      return s.interval(lo, lo + len);
    }
    ElementSet e;
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (rng_.coin()) e.push_back(x);
    }
    if (e.empty()) e.push_back(rng_.below(s.size()));
    return e;
  }

  void pair_checks(const ComplementaryPair& pair) {
    for (const PropertyCheck& c : check_axioms(pair.phi())) add("phi-" + c.name, c.worst_slack, c.pass, c.detail);
    for (const PropertyCheck& c : check_pair(pair)) add(c.name, c.worst_slack, c.pass, c.detail);
    double low = std::numeric_limits<double>::infinity();
    double high = -std::numeric_limits<double>::infinity();
    for (double t : geometric_grid(1e-3, 1e3, 41)) {
      const double r = inverse_product_ratio(pair, t);
      low = std::min(low, r);
      high = std::max(high, r);
    }
    add("inverse-product-above-1", low - 1.0, low > 1.0, format_double(low));
    ineq("inverse-product-at-most-2", high, 2.0 + (opt_.zero_tolerance ? 0.0 : 1e-9),
         format_double(high));
  }

  void norm_checks(const ComplementaryPair& pair) {
    for (std::size_t i = 0; i < opt_.samples; ++i) {
      const ElementSet f = random_subset();
      const GroupFunction chi = GroupFunction::indicator(cell_.group, f);
      agree("charfn-closed-form", luxemburg(pair.phi(), chi).value,
            char_fn_norm(pair.phi(), *cell_.group, f), charfn_tol_);
    }
    for (std::size_t i = 0; i < opt_.samples; ++i) {
      const GroupFunction f = random_function(3);
      const double lux = luxemburg(pair.phi(), f).value;
      const NormReport orl = orlicz_norm(pair, f, {true, 1e-6});
      ineq("luxemburg-le-orlicz", lux, orl.value);
      ineq("orlicz-le-2-luxemburg", orl.value, 2.0 * lux);
      if (orl.cross_check) agree("orlicz-vs-oracle", orl.value, *orl.cross_check, oracle_tol_);
    }
  }

  void lemma_checks(const LemmaCertificate& c, const std::string& tag) {
    add("lemma-unit-on-E" + tag, 1e-12 - c.max_deviation_on_e, c.unit_on_e());
    add("lemma-range" + tag, std::min(c.min_value, 1.0 - c.max_value), c.in_unit_interval());
    add("lemma-support" + tag, 0.0, c.support_ok);
    const double bound = 2.0 * (1.0 + c.epsilon);
    add("lemma-cost-phi" + tag, bound - c.cost_phi, c.cost_phi < bound);
    add("lemma-cost-psi" + tag, bound - c.cost_psi, c.cost_psi < bound);
    for (const auto* chain : {&c.chain_phi, &c.chain_psi}) {
      for (const InequalityStep& s : *chain) {
        const bool ok = s.relation == InequalityStep::Relation::equal ? s.holds()
                                                                      : s.slack() >= floor_;
        add("lemma-step" + tag, s.slack(), ok, s.name);
      }
    }
  }

  void finite_checks(const ComplementaryPair& pair) {
    const SpacePtr& sp = cell_.group;
    lemma_checks(lemma_r_construct(sp, {sp->identity()}, pair, 1.0), "");

    const SegalReport seg = segal_report(sp, pair, opt_.samples, rng_.below(1u << 30));
    for (const SegalCheck& c : seg.checks) {
      add("segal-" + c.name, c.worst_slack, c.worst_slack >= floor_ && c.pass, c.detail);
    }

    const UnitReport unit = convolution_unit(sp, pair);
    const double err = std::max(unit.max_left_error, unit.max_right_error);
    add("unit-convolution", 1e-12 - err, err <= 1e-12);
    add("unit-pointwise", 2.0 * (1.0 + unit.pointwise.epsilon) - unit.pointwise.cost_phi,
        unit.pointwise.pass());

    if (sp->is_abelian()) {
      const CharacterSet a = enumerate_characters(sp);
      const CharacterSet b = multiplicative_functional_search(sp);
      const bool same = a.rescaled(b.modulus) == b;
      add("characters-agree", same ? 0.0 : -1.0, same);
      add("characters-count", double(a.characters.size()) - double(sp->size()),
          a.characters.size() == sp->size());
    }

    for (std::size_t i = 0; i < std::max<std::size_t>(1, opt_.samples / 2); ++i) {
      const SubmultReport r =
          convolution_submultiplicativity(random_function(), random_function(), pair, 8);
      for (const InequalityStep& s : r.steps) ineq("submult-" + s.name, s.lhs, s.rhs);
    }
  }

  void window_checks(const ComplementaryPair& pair) {
    const SpacePtr& sp = cell_.group;
    for (double eps : {1.0, 0.5, 0.1}) {
      lemma_checks(lemma_r_construct(sp, sp->interval(-1, 1), pair, eps),
                   "(eps=" + format_double(eps) + ")");
    }
    bool scoped = false;
    try {
      convolution_unit(sp, pair);
    } catch (const ScopeError&) {
      scoped = true;
    }
    add("unit-out-of-scope", 0.0, scoped);

    const PorosityWitness w = build_witness(standard_instance(sp), pair, opt_.probes,
                                            rng_.below(1u << 30));
    ineq("porosity-threshold", w.threshold, w.k_measure);
    ineq("porosity-final-bound", double(11), w.final_bound);
    ineq("porosity-budget", w.budget_sum, 8.0);
    add("porosity-inside-ball", 32.0 - (std::max(w.dist_f, w.dist_g) + 1.0),
        w.inside_outer_ball(32.0));
    double worst = std::numeric_limits<double>::infinity();
    for (const Probe& p : w.probes) worst = std::min(worst, p.integral - 11.0);
    add("porosity-probes-violate", worst, w.all_probes_violate());
  }

  Cell cell_;
  const SuiteOptions& opt_;
  Rng rng_;
  double floor_ = -1e-9;
  double charfn_tol_ = 1e-10;
  double oracle_tol_ = 1e-6;
  std::vector<SuiteCheck> out_;
};

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SuiteResult run_suite(const SuiteOptions& options) {
  std::vector<Cell> cells;
  for (const ComplementaryPair& p : options.pairs) {
    cells.push_back({nullptr, &p, 0});
    for (const SpacePtr& g : options.groups) cells.push_back({g, &p, 0});
  }
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i].seed = mix(options.seed ^ mix(i));

  std::vector<std::vector<SuiteCheck>> parts(cells.size());
  if (options.parallel) {
    std::vector<std::future<std::vector<SuiteCheck>>> futures;
    for (const Cell& c : cells) {
      futures.push_back(std::async(std::launch::async,
                                   [&options, c] { return CellRunner(c, options).run(); }));
    }
    for (std::size_t i = 0; i < cells.size(); ++i) parts[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < cells.size(); ++i) parts[i] = CellRunner(cells[i], options).run();
  }

  SuiteResult r;
  for (auto& p : parts) {
    for (auto& c : p) r.checks.push_back(std::move(c));
  }
  std::stable_sort(r.checks.begin(), r.checks.end(), [](const SuiteCheck& a, const SuiteCheck& b) {
    return std::tie(a.group, a.pair, a.name) < std::tie(b.group, b.pair, b.name);
  });
  return r;
}

Report suite_report(const SuiteResult& result, const SuiteOptions& options) {
  Report rep("suite");
  std::string groups, pairs;
  for (const SpacePtr& g : options.groups) groups += (groups.empty() ? "" : ",") + g->describe();
  for (const ComplementaryPair& p : options.pairs) pairs += (pairs.empty() ? "" : ",") + p.name();
  rep.input("groups", groups.empty() ? "(none)" : groups);
  rep.input("pairs", pairs.empty() ? "(none)" : pairs);
  rep.input("seed", std::to_string(options.seed));
  rep.input("samples", std::to_string(options.samples));
  rep.input("probes", std::to_string(options.probes));
  rep.input("zero_tolerance", options.zero_tolerance ? "true" : "false");
  rep.value("checks_run", std::to_string(result.checks.size()));
  for (const SlackSummary& s : result.summaries()) {
    rep.value("slack." + s.name,
              "n=" + std::to_string(s.count) + " failed=" + std::to_string(s.failed) +
                  " p0=" + format_double(s.p0) + " p5=" + format_double(s.p5) +
                  " p50=" + format_double(s.p50) + " p95=" + format_double(s.p95) +
                  " p100=" + format_double(s.p100));
    rep.check(s.name, s.failed == 0, s.p0);
  }
  for (const SuiteCheck& c : result.checks) {
    if (!c.pass) {
      rep.note("failed " + c.name + " on " + c.group + " / " + c.pair + ": slack " +
               format_double(c.slack) + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
  }
  return rep;
}

}  // namespace aphi
