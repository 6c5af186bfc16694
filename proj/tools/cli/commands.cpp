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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "aphi/aphi_core.hpp"
#include "aphi/errors.hpp"
#include "aphi/group_space.hpp"
#include "aphi/harmonic.hpp"
#include "aphi/nfunction.hpp"
#include "aphi/orlicz_norms.hpp"
#include "aphi/porosity.hpp"
#include "aphi/spec_io.hpp"
#include "aphi/suite.hpp"

namespace aphi::cli {

namespace {

std::string show(double v) { return format_double(v); }
std::string show(std::int64_t v) { return std::to_string(v); }
std::string show(std::uint64_t v) { return std::to_string(v); }
std::string show(bool v) { return v ? "true" : "false"; }

std::string show_complex(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
}

// Resolves parameters, echoing each into the report with its origin.
class Context {
 public:
  Context(const RunConfig& c, Report& r) : c_(c), r_(r) {}

  template <typename T>
  T param(const std::string& key, const std::optional<T>& v, T fallback) {
    r_.input(key, show(v.value_or(fallback)), !v.has_value());
    return v.value_or(fallback);
  }

  std::uint64_t seed() { return param<std::uint64_t>("seed", c_.seed, 0); }

  Tolerances tolerances() {
    Tolerances t;
    t.root = param("tol_root", c_.tol_root, t.root);
    t.conjugacy = param("tol_conj", c_.tol_conj, t.conjugacy);
    t.check = param("tol_check", c_.tol_check, t.check);
    return t;
  }

  SpacePtr group() {
    if (!c_.group) throw ParseError("missing group spec (--group)");
    SpacePtr g = parse_group_spec(inline_or_file(*c_.group));
    r_.input("group", g->describe());
    return g;
  }

  // Defaults to x^2/2.
  ComplementaryPair pair() {
    ComplementaryPair p = c_.phi ? parse_pair_spec(inline_or_file(*c_.phi))
                                 : ComplementaryPair::make(NFunction::power(2.0));
    r_.input("phi", p.phi().name(), !c_.phi);
    const bool closed = p.construction() == ComplementaryPair::Construction::closed_form;
    r_.value("psi", p.psi().name(), closed ? Provenance::closed_form : Provenance::computed);
    return p;
  }

  std::optional<GroupFunction> maybe_function(const std::string& name, const SpacePtr& space) {
    const std::optional<std::string>& path = name == "f" ? c_.f : c_.g;
    const std::optional<std::string>& rows = name == "f" ? c_.f_rows : c_.g_rows;
    if (path && rows) throw ParseError("give either --" + name + " or --" + name + "-rows, not both");
    if (!path && !rows) return std::nullopt;
    GroupFunction fn = parse_function_data(space, path ? read_file(*path) : *rows);
    std::string echo;
    for (std::size_t x : fn.support()) {
      echo += (echo.empty() ? "" : "; ") + space->label(x) + " " + show_complex(fn[x]);
    }
    r_.input(name, echo.empty() ? "0" : echo);
    return fn;
  }

  GroupFunction function(const std::string& name, const SpacePtr& space) {
    auto fn = maybe_function(name, space);
    if (!fn) throw ParseError("missing function data (--" + name + " or --" + name + "-rows)");
    return *fn;
  }

  ElementSet set(const GroupSpace& space) {
    if (!c_.set) throw ParseError("missing element set (--set)");
    ElementSet s = parse_set(space, *c_.set);
    if (s.empty()) throw DomainError("the element set is empty");
    r_.input("set", *c_.set);
    return s;
  }

  const RunConfig& config() const { return c_; }

 private:
  const RunConfig& c_;
  Report& r_;
};

double rel_slack(double value, double reference, double tol) {
  return tol * std::abs(reference) - std::abs(value - reference);
}

void add_equal(Report& r, const std::string& name, double lhs, double rhs, double tol) {
  const double s = tol * (1.0 + std::abs(rhs)) - std::abs(lhs - rhs);
  r.check(name, lhs, "~=", rhs, s, s >= 0.0);
}

void add_le(Report& r, const std::string& name, double lhs, double rhs, double floor) {
  r.check(name, lhs, "<=", rhs, rhs - lhs, rhs - lhs >= floor);
}

void report_steps(Report& r, const std::vector<InequalityStep>& steps, const std::string& prefix,
                  double floor) {
  for (const InequalityStep& s : steps) r.check(s, prefix, floor);
}

void report_lemma(Report& r, const LemmaCertificate& c, const std::string& prefix,
                  double floor) {
  r.value(prefix + "epsilon", c.epsilon, Provenance::input);
  r.value(prefix + "V_measure", c.leptin.measure);
  r.value(prefix + "EV_measure", c.leptin.product_measure);
  r.value(prefix + "leptin_ratio", c.leptin.ratio);
  if (c.leptin.half_width >= 0) r.value(prefix + "V_half_width", std::to_string(c.leptin.half_width));
  r.value(prefix + "cost_phi", c.cost_phi);
  r.value(prefix + "cost_psi", c.cost_psi);
  r.check(prefix + "u = 1 on E", c.max_deviation_on_e, "<=", 1e-12, 1e-12 - c.max_deviation_on_e,
          c.unit_on_e());
  r.check(prefix + "0 <= u", 0.0, "<=", c.min_value, c.min_value, c.min_value >= -1e-12);
  r.check(prefix + "u <= 1", c.max_value, "<=", 1.0, 1.0 - c.max_value, c.max_value <= 1.0 + 1e-12);
  r.check(prefix + "supp u in E V V^-1", c.support_ok);
  const double bound = 2.0 * (1.0 + c.epsilon);
  r.check(prefix + "cost_phi < 2(1+eps)", c.cost_phi, "<", bound, bound - c.cost_phi,
          c.cost_phi < bound);
  r.check(prefix + "cost_psi < 2(1+eps)", c.cost_psi, "<", bound, bound - c.cost_psi,
          c.cost_psi < bound);
  report_steps(r, c.chain_phi, prefix + "A_Phi: ", floor);
  report_steps(r, c.chain_psi, prefix + "A_Psi: ", floor);
}

bool is_indicator(const GroupFunction& f) {
  for (Complex z : f.values()) {
    if (z != Complex(0.0) && z != Complex(1.0)) return false;
  }
  return !f.is_zero();
}

// ---- nfunc ----------------------------------------------------------------

void nfunc_conjugate(Context& ctx, Report& r) {
  const ComplementaryPair pair = ctx.pair();
  const Tolerances tol = ctx.tolerances();
  const double lo = ctx.param("y_min", ctx.config().y_min, 1e-2);
  const double hi = ctx.param("y_max", ctx.config().y_max, 1e2);
  const auto count = ctx.param<std::int64_t>("count", ctx.config().count, 9);
  if (!(lo > 0.0) || !(hi >= lo) || count < 1) throw DomainError("need 0 < y_min <= y_max and count >= 1");
  const auto closed = pair.phi().closed_form_complement();
  for (double y : geometric_grid(lo, hi, static_cast<std::size_t>(count))) {
    const ConjugateValue v = conjugate_at(pair.phi(), y, tol);
    const std::string key = "psi(" + show(y) + ")";
    r.value(key, v.value);
    r.value(key + ".maximizer", v.maximizer);
    if (v.truncated) r.note(key + " hit the domain cap; value is a lower bound");
    if (closed) {
      const double c = (*closed)(y);
      r.value(key + ".closed_form", c, Provenance::closed_form);
      const double s = rel_slack(v.value, c, tol.conjugacy);
      r.check("conjugate matches closed form at y=" + show(y), v.value, "~=", c, s, s >= 0.0);
    }
  }
  if (!closed) r.note("no closed-form complement; values are numeric only");
}

void nfunc_check(Context& ctx, Report& r) {
  const ComplementaryPair pair = ctx.pair();
  const Tolerances tol = ctx.tolerances();
  for (const PropertyCheck& c : check_axioms(pair.phi(), tol)) r.check(c, "phi ");
  for (const PropertyCheck& c : check_axioms(pair.psi(), tol)) r.check(c, "psi ");
  for (const PropertyCheck& c : check_pair(pair, tol)) r.check(c);
  double low = INFINITY, high = -INFINITY;
  for (double t : geometric_grid(1e-3, 1e3, 41)) {
    const double q = inverse_product_ratio(pair, t, tol);
    low = std::min(low, q);
    high = std::max(high, q);
  }
  r.value("inverse_product_min", low);
  r.value("inverse_product_max", high);
  r.check("1 < phi^-1(t) psi^-1(t) / t", 1.0, "<", low, low - 1.0, low > 1.0);
  add_le(r, "phi^-1(t) psi^-1(t) / t <= 2", high, 2.0, -tol.check);
}

// ---- norm -----------------------------------------------------------------

void norm_modular(Context& ctx, Report& r) {
  const SpacePtr g = ctx.group();
  const ComplementaryPair pair = ctx.pair();
  const GroupFunction f = ctx.function("f", g);
  r.value("modular", modular(pair.phi(), f));
}

void norm_luxemburg(Context& ctx, Report& r) {
  const SpacePtr g = ctx.group();
  const ComplementaryPair pair = ctx.pair();
  const Tolerances tol = ctx.tolerances();
  const GroupFunction f = ctx.function("f", g);
  const NormReport n = luxemburg(pair.phi(), f);
  r.value("luxemburg", n.value);
  r.value("method", to_string(n.method));
  r.value("iterations", std::to_string(n.iterations));
  if (n.value > 0.0) {
    GroupFunction scaled = f;
    scaled *= 1.0 / n.value;
    add_le(r, "rho_Phi(f / N) <= 1", modular(pair.phi(), scaled), 1.0, -tol.check);
  }
  if (is_indicator(f)) {
    const double c = char_fn_norm(pair.phi(), *g, f.support(), tol);
    r.value("closed_form", c, Provenance::closed_form);
    add_equal(r, "luxemburg = 1 / phi^-1(1 / lambda(F))", n.value, c, 1e-10);
  }
}

void norm_orlicz(Context& ctx, Report& r) {
  const SpacePtr g = ctx.group();
  const ComplementaryPair pair = ctx.pair();
  const Tolerances tol = ctx.tolerances();
  const GroupFunction f = ctx.function("f", g);
  const NormReport o = orlicz_norm(pair, f, {true, 1e-6});
  const double lux = luxemburg(pair.phi(), f).value;
  r.value("orlicz", o.value);
  r.value("method", to_string(o.method));
  r.value("luxemburg", lux);
  if (o.cross_check) {
    r.value("oracle", *o.cross_check);
    const double s = 1e-6 * std::abs(*o.cross_check) - std::abs(o.value - *o.cross_check);
    r.check("min method = Lagrangian oracle (rel 1e-6)", o.value, "~=", *o.cross_check, s, s >= 0.0);
  }
  if (!o.note.empty()) r.note(o.note);
  add_le(r, "N_Phi(f) <= ||f||_Phi", lux, o.value, -tol.check);
  add_le(r, "||f||_Phi <= 2 N_Phi(f)", o.value, 2.0 * lux, -tol.check);
}

void norm_charfn(Context& ctx, Report& r) {
  const SpacePtr g = ctx.group();
  const ComplementaryPair pair = ctx.pair();
  const Tolerances tol = ctx.tolerances();
  const ElementSet s = ctx.set(*g);
  const double c = char_fn_norm(pair.phi(), *g, s, tol);
  const double lux = luxemburg(pair.phi(), GroupFunction::indicator(g, s)).value;
  r.value("lambda(F)", g->measure(s));
  r.value("closed_form", c, Provenance::closed_form);
  r.value("luxemburg", lux);
  add_equal(r, "luxemburg(chi_F) = 1 / phi^-1(1 / lambda(F))", lux, c, 1e-10);
}

// ---- group ----------------------------------------------------------------

void group_check(Context& ctx, Report& r) {
  const SpacePtr g = ctx.group();
  const std::uint64_t seed = ctx.seed();
  const AxiomReport a = check_group_axioms(*g, seed);
  r.value("size", std::to_string(g->size()));
  r.value("abelian", show(g->is_abelian()));
  r.value("triples_checked", std::to_string(a.triples));
  r.value("exhaustive", show(a.exhaustive));
  if (g->is_finite()) r.value("weight", show(g->weight_value(0)), Provenance::closed_form);
  r.check("group axioms and left-invariant weights", a.pass);
  if (!a.detail.empty()) r.note(a.detail);
}

void group_convolve(Context& ctx, Report& r) {
  const SpacePtr g = ctx.group();
  const GroupFunction f = ctx.function("f", g);
  const GroupFunction h = ctx.function("g", g);
  const FlaggedFunction c = convolve(f, h);
  for (std::size_t x : c.function.support()) {
    r.value("(f*g)(" + g->label(x) + ")", show_complex(c.function[x]));
  }
  r.value("truncated", show(c.truncated));
  if (c.truncated) r.note("some products left the window; values near the boundary are partial");
  add_le(r, "||f*g||_1 <= ||f||_1 ||g||_1", c.function.l1_norm(), f.l1_norm() * h.l1_norm(), -1e-9);
}

void group_leptin(Context& ctx, Report& r) {
  const SpacePtr g = ctx.group();
  const ElementSet k = ctx.set(*g);
  const double eps = ctx.param("epsilon", ctx.config().epsilon, 1.0);
  const LeptinSet l = leptin_search(*g, k, eps);
  r.value("lambda(U)", l.measure);
  r.value("lambda(KU)", l.product_measure);
  r.value("ratio", l.ratio);
  if (l.half_width >= 0) r.value("half_width", std::to_string(l.half_width));
  r.check("lambda(KU) < (1+eps) lambda(U)", l.ratio, "<", 1.0 + eps, l.margin, l.margin > 0.0);
}

// ---- aphi -----------------------------------------------------------------

void aphi_bound(Context& ctx, Report& r) {
  const SpacePtr g = ctx.group();
  const ComplementaryPair pair = ctx.pair();
  const GroupFunction u = ctx.function("f", g);
  AphiOptions opt;
  opt.budget = static_cast<std::size_t>(ctx.param<std::int64_t>("budget", ctx.config().budget, 32));
  const AphiBound b = aphi_upper(u, pair, opt);
  r.value("lower", b.lower);
  r.value("upper", b.upper);
  r.value("witness", b.witness_origin);
  r.value("terms", std::to_string(b.witness.terms.size()));
  r.value("moves", std::to_string(b.moves));
  add_le(r, "||u||_inf <= A_Phi upper", b.lower, b.upper, -1e-9);
  const double err = b.witness.reconstruction_error();
  r.check("witness reconstructs u", err, "<=", 1e-9, 1e-9 * (1.0 + u.sup_norm()) - err,
          b.witness.valid());
}

void aphi_lemma(Context& ctx, Report& r) {
  const SpacePtr g = ctx.group();
  const ComplementaryPair pair = ctx.pair();
  const Tolerances tol = ctx.tolerances();
  const ElementSet e = ctx.set(*g);
  const double eps = ctx.param("epsilon", ctx.config().epsilon, 1.0);
  report_lemma(r, lemma_r_construct(g, e, pair, eps), "", -tol.check);
}

void aphi_submult(Context& ctx, Report& r) {
  const SpacePtr g = ctx.group();
  const ComplementaryPair pair = ctx.pair();
  const Tolerances tol = ctx.tolerances();
  const GroupFunction u = ctx.function("f", g);
  const GroupFunction v = ctx.function("g", g);
  const auto budget = ctx.param<std::int64_t>("budget", ctx.config().budget, 32);
  const SubmultReport s =
      convolution_submultiplicativity(u, v, pair, static_cast<std::size_t>(budget));
  r.value("alpha", s.alpha);
  r.value("beta", s.beta);
  r.value("aphi_upper(u*v)", s.upper_uv);
  r.value("N_Phi(u) ||v-check||_Psi", s.single_pair);
  r.value("alpha beta ||u||_inf ||v||_inf", s.outer);
  r.value("alpha beta ||u||_A ||v||_A", s.algebra_bound);
  report_steps(r, s.steps, "", -tol.check);
}

// ---- porosity -------------------------------------------------------------

void porosity_witness(Context& ctx, Report& r) {
  const RunConfig& c = ctx.config();
  const ComplementaryPair pair = ctx.pair();
  const auto window = ctx.param<std::int64_t>("window", c.window, 256);
  const auto n = ctx.param<std::int64_t>("n", c.n, 11);
  const double radius = ctx.param("R", c.radius, 32.0);
  const auto vr = ctx.param<std::int64_t>("v_radius", c.v_radius, 1);
  const auto probes = ctx.param<std::int64_t>("probes", c.probes, 100);
  const std::uint64_t seed = ctx.seed();
  if (window < 0 || probes < 0) throw DomainError("window and probes must be >= 0");
  const SpacePtr w = GroupSpace::window(window);
  auto f = ctx.maybe_function("f", w);
  auto g = ctx.maybe_function("g", w);
  if (!f || !g) {
    if (f || g) throw ParseError("give both --f and --g, or neither for chi_[-5,5]");
    if (window < 5) throw InfeasibleError("the default instance chi_[-5,5] needs window >= 5");
    const GroupFunction chi = GroupFunction::indicator(w, w->interval(-5, 5));
    f = chi;
    g = chi;
    r.input("f", "chi_[-5,5]", true);
    r.input("g", "chi_[-5,5]", true);
  }
  const PorosityInstance inst = PorosityInstance::make(*f, *g, n, radius, vr);
  const PorosityWitness wit = build_witness(inst, pair, static_cast<std::size_t>(probes), seed);

  r.value("quadrant", show(std::int64_t{wit.quadrant[0]}) + "," + show(std::int64_t{wit.quadrant[1]}));
  std::string qm;
  for (double q : wit.quadrant_measures) qm += (qm.empty() ? "" : ",") + show(q);
  r.value("quadrant_measures", qm);
  r.value("m0", std::to_string(wit.m0));
  std::string bp;
  for (auto a : wit.base_points) bp += (bp.empty() ? "" : ",") + std::to_string(a);
  r.value("base_points", bp);
  r.value("lambda(K)", wit.k_measure);
  r.value("threshold_512n/R^2", wit.threshold, Provenance::closed_form);
  r.value("final_bound_R^2/512_lambda(K)", wit.final_bound);
  r.value("cost_phi(u)", wit.lemma.cost_phi);
  r.value("cost_psi(u)", wit.lemma.cost_psi);
  r.value("dist_f", wit.dist_f);
  r.value("dist_g", wit.dist_g);
  r.value("avoided_radius", radius * wit.avoidance_ratio, Provenance::closed_form);

  r.check("lambda(K) > 512 n / R^2", wit.threshold, "<", wit.k_measure, wit.margin,
          wit.k_measure > wit.threshold);
  r.check("(R^2/512) lambda(K) > n", double(n), "<", wit.final_bound, wit.final_bound - double(n),
          wit.final_bound > double(n));
  add_le(r, "cost_A_Phi(u) + cost_A_Psi(u) <= 8", wit.budget_sum, 8.0, 0.0);
  r.check("u = 1 on K", wit.lemma.unit_on_e());
  const double reach = std::max(wit.dist_f, wit.dist_g) + radius / 32.0;
  add_le(r, "avoided ball inside the R-ball", reach, radius, 0.0);

  std::size_t violating = 0;
  double worst = INFINITY, min_h = INFINITY, min_k = INFINITY;
  std::map<std::string, std::size_t> kinds;
  for (const Probe& p : wit.probes) {
    if (p.integral > double(n)) ++violating;
    worst = std::min(worst, p.integral);
    min_h = std::min(min_h, p.min_h_on_k);
    min_k = std::min(min_k, p.min_k_on_k);
    ++kinds[p.kind];
  }
  for (const auto& [k, cnt] : kinds) r.value("probes." + k, std::to_string(cnt));
  r.value("probes_violating", std::to_string(violating) + "/" + std::to_string(wit.probes.size()));
  if (!wit.probes.empty()) {
    r.value("min_probe_integral", worst);
    r.check("every probe leaves E_n", double(n), "<", worst, worst - double(n),
            violating == wit.probes.size());
    r.check("min |h| on K >= R/16", radius / 16.0, "<=", min_h, min_h - radius / 16.0,
            min_h >= radius / 16.0);
    r.check("min |k| on K > R/32", radius / 32.0, "<", min_k, min_k - radius / 32.0,
            min_k > radius / 32.0);
  }
}

// ---- harmonic -------------------------------------------------------------

void segal(Context& ctx, Report& r) {
  const SpacePtr g = ctx.group();
  const ComplementaryPair pair = ctx.pair();
  const Tolerances tol = ctx.tolerances();
  const auto samples = ctx.param<std::int64_t>("samples", ctx.config().samples, 50);
  const std::uint64_t seed = ctx.seed();
  if (samples < 0) throw DomainError("samples must be >= 0");
  const SegalReport s = segal_report(g, pair, static_cast<std::size_t>(samples), seed);
  r.value("rank", std::to_string(s.rank));
  r.value("symmetric", show(s.symmetric));
  for (const SegalCheck& c : s.checks) {
    r.check(c.name + (c.detail.empty() ? "" : " [" + c.detail + "]"), c.pass && c.worst_slack >= -tol.check,
            c.worst_slack);
  }
}

void unit(Context& ctx, Report& r) {
  const SpacePtr g = ctx.group();
  const ComplementaryPair pair = ctx.pair();
  const Tolerances tol = ctx.tolerances();
  const double eps = ctx.param("epsilon", ctx.config().epsilon, 1.0);
  const UnitReport u = convolution_unit(g, pair, eps);
  r.value("e_u(" + g->label(g->identity()) + ")", show_complex(u.unit[g->identity()]),
          Provenance::closed_form);
  r.value("basis_size", std::to_string(u.basis_size));
  r.value("aphi_lower(e_u)", u.bracket.lower);
  r.value("aphi_upper(e_u)", u.bracket.upper);
  r.check("e_u * chi_x = chi_x", u.max_left_error, "<=", 1e-12, 1e-12 - u.max_left_error,
          u.max_left_error <= 1e-12);
  r.check("chi_x * e_u = chi_x", u.max_right_error, "<=", 1e-12, 1e-12 - u.max_right_error,
          u.max_right_error <= 1e-12);
  add_le(r, "aphi_lower(e_u) <= aphi_upper(e_u)", u.bracket.lower, u.bracket.upper, -1e-9);
  report_lemma(r, u.pointwise, "1_G ", -tol.check);
}

void report_characters(Report& r, const CharacterSet& cs, const std::string& prefix) {
  const GroupSpace& g = *cs.space;
  r.value(prefix + "modulus", std::to_string(cs.modulus));
  r.value(prefix + "count", std::to_string(cs.characters.size()));
  for (std::size_t i = 0; i < cs.characters.size(); ++i) {
    std::string ex;
    for (auto k : cs.characters[i].exponent) ex += (ex.empty() ? "" : " ") + std::to_string(k);
    r.value(prefix + "w" + std::to_string(i), ex);
  }
  r.check(prefix + "count = |G|", double(cs.characters.size()), "=", double(g.size()),
          0.0, cs.characters.size() == g.size());
  bool unital = true;
  double worst = 0.0;
  for (std::size_t i = 0; i < cs.characters.size(); ++i) {
    unital = unital && cs.characters[i].exponent[g.identity()] == 0;
    std::vector<Complex> w;
    for (std::size_t x = 0; x < g.size(); ++x) w.push_back(cs.value(i, x));
    worst = std::max(worst, is_multiplicative(cs.space, w).worst);
  }
  r.check(prefix + "w(e) = 1", unital);
  r.check(prefix + "phi_w(delta_s * delta_t) = phi_w(delta_s) phi_w(delta_t)", worst, "<=",
          1e-9, 1e-9 - worst, worst <= 1e-9);
}

void characters_enumerate(Context& ctx, Report& r) {
  const SpacePtr g = ctx.group();
  report_characters(r, enumerate_characters(g), "");
}

void characters_brute(Context& ctx, Report& r) {
  const SpacePtr g = ctx.group();
  const Tolerances tol = ctx.tolerances();
  const CharacterSet brute = multiplicative_functional_search(g, tol.check);
  report_characters(r, brute, "");
  const CharacterSet direct = enumerate_characters(g);
  const bool same = direct.rescaled(brute.modulus) == brute;
  r.check("brute force = homomorphism enumeration", same);
}

// ---- suite ----------------------------------------------------------------

void suite(Context& ctx, Report& r) {
  const RunConfig& c = ctx.config();
  SuiteOptions opt;
  opt.seed = c.seed.value_or(0);
  opt.samples = static_cast<std::size_t>(c.samples.value_or(8));
  opt.probes = static_cast<std::size_t>(c.probes.value_or(20));
  opt.zero_tolerance = c.zero_tolerance.value_or(false);
  if (c.battery_groups) {
    for (const std::string& s : *c.battery_groups) opt.groups.push_back(parse_group_spec(s));
  } else {
    opt.groups = default_battery_groups();
  }
  if (c.battery_pairs) {
    for (const std::string& s : *c.battery_pairs) opt.pairs.push_back(parse_pair_spec(s));
  } else {
    opt.pairs = catalog_pairs();
  }
  Report full = suite_report(run_suite(opt), opt);
  r = std::move(full);
  if (!c.battery_groups) r.mark_default("groups");
  if (!c.battery_pairs) r.mark_default("pairs");
  if (!c.seed) r.mark_default("seed");
  if (!c.samples) r.mark_default("samples");
  if (!c.probes) r.mark_default("probes");
  if (!c.zero_tolerance) r.mark_default("zero_tolerance");
}

using Handler = std::function<void(Context&, Report&)>;

const std::vector<std::pair<std::string, Handler>>& table() {
  static const std::vector<std::pair<std::string, Handler>> t{
      {"nfunc conjugate", nfunc_conjugate},
      {"nfunc check", nfunc_check},
      {"norm modular", norm_modular},
      {"norm luxemburg", norm_luxemburg},
      {"norm orlicz", norm_orlicz},
      {"norm charfn", norm_charfn},
      {"group check", group_check},
      {"group convolve", group_convolve},
      {"group leptin", group_leptin},
      {"aphi bound", aphi_bound},
      {"aphi lemma-r", aphi_lemma},
      {"aphi submult", aphi_submult},
      {"porosity witness", porosity_witness},
      {"segal report", segal},
      {"unit check", unit},
      {"characters enumerate", characters_enumerate},
      {"characters brute", characters_brute},
      {"suite", suite},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : table()) out.push_back(name);
    return out;
  }();
  return v;
}

Report run(const RunConfig& config) {
  if (!config.verb) throw ParseError("no verb given");
  for (const auto& [name, handler] : table()) {
    if (name == *config.verb) {
      Report r(name);
      Context ctx(config, r);
      handler(ctx, r);
      return r;
    }
  }
  throw ParseError("unknown verb '" + *config.verb + "'");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ContradictionError*>(&e)) return kContradiction;
  if (dynamic_cast<const ScopeError*>(&e) || dynamic_cast<const InfeasibleError*>(&e)) {
    return kScopeError;
  }
  return kInputError;
}

}  // namespace aphi::cli
