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

#include "aphi/porosity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aphi/errors.hpp"
#include "aphi/random.hpp"

namespace aphi {

double en_integral(const GroupFunction& h, const GroupFunction& k, std::size_t x) {
  const GroupSpace& s = h.space();
  const std::size_t x_inv = s.inv(x);
  double sum = 0.0;
  for (std::size_t y : h.support()) {
    const auto z = s.mul(x_inv, y);
    if (!z) continue;  // k vanishes off the window
    sum += std::abs(h[y]) * std::abs(k[*z]) * s.weight_value(y);
  }
  return sum;
}

EnMembership en_membership(const GroupFunction& f, const GroupFunction& g,
                           std::int64_t n, std::int64_t v_radius) {
  const GroupSpace& s = f.space();
  if (!s.is_window()) throw ScopeError("E_n membership is defined on Z-windows");
  if (!same_space(s, g.space())) throw DomainError("en_membership: mismatched spaces");
  EnMembership m;
  m.max_integral = -1.0;
  for (std::int64_t x = -v_radius; x <= v_radius; ++x) {
    const auto xi = s.window_index(x);
    if (!xi) throw InfeasibleError("V does not fit in the window");
    const double v = en_integral(f, g, *xi);
    if (v > m.max_integral) {
      m.max_integral = v;
      m.argmax = x;
    }
  }
  m.member = m.max_integral <= double(n);
  const std::size_t last = s.size() - 1;
  for (const GroupFunction* fn : {&f, &g}) {
    if ((*fn)[0] != Complex{} || (*fn)[last] != Complex{}) m.truncated = true;
  }
  return m;
}

PorosityInstance PorosityInstance::make(GroupFunction f, GroupFunction g, std::int64_t n,
                                        double radius, std::int64_t v_radius) {
  if (!f.space().is_window()) throw ScopeError("porosity witnesses live on Z-windows");
  if (n < 1) throw DomainError("porosity: n must be a positive integer");
  if (!(radius > 0.0)) throw DomainError("porosity: R must be > 0");
  if (v_radius < 0) throw DomainError("porosity: V radius must be >= 0");
  const EnMembership m = en_membership(f, g, n, v_radius);
  if (!m.member) {
    std::ostringstream os;
    os.precision(17);
    os << "porosity: (f, g) is not in E_" << n << " (integral " << m.max_integral
       << " at x = " << m.argmax << ")";
    throw DomainError(os.str());
  }
  return PorosityInstance{std::move(f), std::move(g), n, radius, v_radius};
}

PorosityInstance standard_instance(const SpacePtr& window) {
  if (!window->is_window()) throw ScopeError("porosity instances live on Z-windows");
  if (window->window_radius() < 5) throw InfeasibleError("the standard instance needs radius >= 5");
  const GroupFunction chi = GroupFunction::indicator(window, window->interval(-5, 5));
  return PorosityInstance::make(chi, chi, 11, 32.0, 1);
}

bool PorosityWitness::all_probes_violate() const {
  return !probes.empty() && std::all_of(probes.begin(), probes.end(), [&](const Probe& p) {
    return p.integral > double(n);
  });
}

bool PorosityWitness::inside_outer_ball(double radius) const {
  return std::max(dist_f, dist_g) + radius / 32.0 <= radius;
}

namespace {

// Base points 0, s, -s, 2s, -2s, ... with s = 2r + 1, so the translates
// a_m V are pairwise disjoint.
std::vector<std::int64_t> base_point_sequence(std::int64_t w, std::int64_t r) {
  std::vector<std::int64_t> pts{0};
  const std::int64_t step = 2 * r + 1;
  for (std::int64_t j = 1; j * step + r <= w; ++j) {
    pts.push_back(j * step);
    pts.push_back(-j * step);
  }
  return pts;
}

int sign_of(double re) { return re >= 0.0 ? 1 : -1; }

std::size_t quadrant_index(int s1, int s2) {
  return static_cast<std::size_t>((s1 == 1 ? 0 : 2) + (s2 == 1 ? 0 : 1));
}

struct Component {
  GroupFunction fn;
  double cost_phi = 0.0;
  double cost_psi = 0.0;
};

std::int64_t window_estimate(double threshold, std::int64_t r) {
  const std::int64_t width = 2 * r + 1;
  const std::int64_t translates =
      static_cast<std::int64_t>(std::floor(threshold / double(width))) + 1;
  const std::int64_t reach = ((translates - 1 + 1) / 2) * width + r;
  return 3 * reach + 2;
}

}  // namespace

PorosityWitness build_witness(const PorosityInstance& inst, const ComplementaryPair& pair,
                              std::size_t probe_count, std::uint64_t seed) {
  const SpacePtr& sp = inst.f.space_ptr();
  const GroupSpace& s = *sp;
  const double R = inst.radius;
  const std::int64_t r = inst.v_radius;
  PorosityWitness w;
  w.n = inst.n;
  w.threshold = 512.0 * double(inst.n) / (R * R);

  // (1) quadrant with the largest accumulated translate measure.
  const auto pts = base_point_sequence(s.window_radius(), r);
  for (std::int64_t a : pts) {
    for (std::int64_t v = -r; v <= r; ++v) {
      const std::size_t x = *s.window_index(a + v);
      const int s1 = sign_of(inst.f[x].real());
      const int s2 = sign_of(inst.g[x].real());
      w.quadrant_measures[quadrant_index(s1, s2)] += s.weight_value(x);
    }
  }
  const std::array<std::array<int, 2>, 4> order{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  std::size_t best = 0;
  for (std::size_t q = 1; q < 4; ++q) {
    if (w.quadrant_measures[q] > w.quadrant_measures[best]) best = q;
  }
  w.quadrant = order[best];

  // (2) greedy translates until lambda(K) > 512 n / R^2.
  std::vector<char> in_k(s.size(), 0);
  for (std::int64_t a : pts) {
    if (w.k_measure > w.threshold) break;
    w.base_points.push_back(a);
    for (std::int64_t v = -r; v <= r; ++v) {
      const std::size_t x = *s.window_index(a + v);
      if (sign_of(inst.f[x].real()) == w.quadrant[0] &&
          sign_of(inst.g[x].real()) == w.quadrant[1] && !in_k[x]) {
        in_k[x] = 1;
        w.k_measure += s.weight_value(x);
      }
    }
  }
  if (!(w.k_measure > w.threshold)) {
    throw InfeasibleError("porosity: the window holds only lambda(K) = " +
                          std::to_string(w.k_measure) + " in the chosen quadrant; need > " +
                          std::to_string(w.threshold) + ". Minimal window estimate: radius " +
                          std::to_string(window_estimate(w.threshold, r)));
  }
  w.m0 = w.base_points.size();
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (in_k[x]) w.k.push_back(x);
  }
  w.margin = w.k_measure - w.threshold;

  // (3) plateau function with epsilon = 1.
  try {
    w.lemma = lemma_r_construct(sp, w.k, pair, 1.0);
  } catch (const InfeasibleError& e) {
    throw InfeasibleError(std::string(e.what()) + ". Minimal window estimate: radius " +
                          std::to_string(window_estimate(w.threshold, r)));
  }
  const GroupFunction& u = w.lemma.u;
  w.budget_sum = w.lemma.cost_phi + w.lemma.cost_psi;
  if (!(w.budget_sum <= 8.0) || !w.lemma.unit_on_e()) {
    throw ContradictionError("porosity: plateau function exceeds the budget of 8",
                             "cost_phi=" + std::to_string(w.lemma.cost_phi) +
                                 " cost_psi=" + std::to_string(w.lemma.cost_psi));
  }

  // (4) the avoidance pair.
  const double sf = w.quadrant[0] * R / 8.0;
  const double sg = w.quadrant[1] * R / 16.0;
  w.f_tilde = inst.f + u * Complex(sf);
  w.g_tilde = inst.g + u * Complex(sg);
  w.dist_f = (R / 8.0) * w.lemma.cost_phi;
  w.dist_g_phi = (R / 16.0) * w.lemma.cost_phi;
  w.dist_g = (R / 16.0) * w.budget_sum;
  w.final_bound = R * R / 512.0 * w.k_measure;

  // (5) perturbation components with certified costs.
  Rng rng(seed);
  std::vector<Component> comps;
  comps.push_back({u, w.lemma.cost_phi, w.lemma.cost_psi});
  const std::int64_t k_lo = s.integer_at(w.k.front());
  const std::int64_t k_hi = s.integer_at(w.k.back());
  for (int i = 0; i < 3; ++i) {
    const std::int64_t a = k_lo + static_cast<std::int64_t>(
                                      rng.below(static_cast<std::size_t>(k_hi - k_lo + 1)));
    const std::int64_t len = static_cast<std::int64_t>(rng.below(3));
    const double eps = i == 0 ? 0.5 : (i == 1 ? 1.0 : 2.0);
    try {
      const ElementSet e = s.interval(a, std::min(a + len, k_hi));
      LemmaCertificate c = lemma_r_construct(sp, e, pair, eps);
      comps.push_back({c.u, c.cost_phi, c.cost_psi});
    } catch (const InfeasibleError&) {
      // component does not fit; the pool just gets smaller
    }
  }
  for (int i = 0; i < 4; ++i) {
    const std::size_t t = w.k[rng.below(w.k.size())];
    const GroupFunction atom = GroupFunction::point(sp, t);
    const Decomposition d = atomic_decomposition(atom);
    comps.push_back({atom, cost(d, pair), cost(d, pair.swapped())});
  }

  const double ball = R / 32.0;
  auto make_probe = [&](const std::string& kind, const GroupFunction& d1,
                        const GroupFunction& d2, double b1, double b2) {
    Probe p;
    p.kind = kind;
    p.delta_f_bound = b1;
    p.delta_g_bound = b2;
    p.delta_f_sup = d1.sup_norm();
    p.delta_g_sup = d2.sup_norm();
    const GroupFunction h = w.f_tilde + d1;
    const GroupFunction k = w.g_tilde + d2;
    p.min_h_on_k = std::numeric_limits<double>::infinity();
    p.min_k_on_k = std::numeric_limits<double>::infinity();
    for (std::size_t y : w.k) {
      p.min_h_on_k = std::min(p.min_h_on_k, std::abs(h[y]));
      p.min_k_on_k = std::min(p.min_k_on_k, std::abs(k[y]));
    }
    p.k_bound_on_uk = true;
    const SetProduct uk = product_set(s, s.interval(-r, r), w.k);
    for (std::size_t y : uk.set) {
      if (!(std::abs(k[y]) > ball)) p.k_bound_on_uk = false;
    }
    // (6) find x in U = V with integral > n, preferring the identity.
    p.all_of_u_violate = true;
    bool found = false;
    std::vector<std::int64_t> xs{0};
    for (std::int64_t x = 1; x <= r; ++x) {
      xs.push_back(-x);
      xs.push_back(x);
    }
    for (std::int64_t x : xs) {
      const double v = en_integral(h, k, *s.window_index(x));
      const bool violates = v > double(inst.n);
      if (!violates) p.all_of_u_violate = false;
      if (violates && !found) {
        found = true;
        p.violating_x = x;
        p.integral = v;
      }
    }
    if (!found) {
      std::ostringstream os;
      os.precision(17);
      os << "probe (" << kind << ") with certified perturbations " << b1 << ", " << b2
         << " < R/32 = " << ball << " stays inside E_" << inst.n;
      throw ContradictionError(os.str(), dump(w));
    }
    w.probes.push_back(std::move(p));
  };

  const GroupFunction zero(sp);
  if (probe_count > 0) make_probe("center", zero, zero, 0.0, 0.0);
  if (probe_count > 1) {
    const double t1 = 0.999 * ball / w.lemma.cost_phi;
    const double t2 = 0.999 * ball / w.budget_sum;
    make_probe("adversarial", u * Complex(-w.quadrant[0] * t1),
               u * Complex(-w.quadrant[1] * t2), t1 * w.lemma.cost_phi,
               t2 * w.budget_sum);
  }
  while (w.probes.size() < probe_count) {
    GroupFunction d1(sp), d2(sp);
    double raw1 = 0.0, raw2 = 0.0;
    std::vector<Complex> z1(comps.size()), z2(comps.size());
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (rng.coin()) {
        z1[j] = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        raw1 += std::abs(z1[j]) * comps[j].cost_phi;
      }
      if (rng.coin()) {
        z2[j] = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        raw2 += std::abs(z2[j]) * (comps[j].cost_phi + comps[j].cost_psi);
      }
    }
    const double target1 = ball * rng.uniform(0.0, 0.999);
    const double target2 = ball * rng.uniform(0.0, 0.999);
    const double c1 = raw1 > 0.0 ? target1 / raw1 : 0.0;
    const double c2 = raw2 > 0.0 ? target2 / raw2 : 0.0;
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (z1[j] != Complex{}) {
        d1 += comps[j].fn * (c1 * z1[j]);
        b1 += std::abs(c1 * z1[j]) * comps[j].cost_phi;
      }
      if (z2[j] != Complex{}) {
        d2 += comps[j].fn * (c2 * z2[j]);
        b2 += std::abs(c2 * z2[j]) * (comps[j].cost_phi + comps[j].cost_psi);
      }
    }
    make_probe("random", d1, d2, b1, b2);
  }
  return w;
}

std::string dump(const PorosityWitness& w) {
  std::ostringstream os;
  os.precision(17);
  os << "quadrant=(" << w.quadrant[0] << "," << w.quadrant[1] << ")\n";
  os << "quadrant_measures=";
  for (double q : w.quadrant_measures) os << q << " ";
  os << "\nm0=" << w.m0 << " base_points=";
  for (auto a : w.base_points) os << a << " ";
  os << "\nlambda(K)=" << w.k_measure << " threshold=" << w.threshold
     << " margin=" << w.margin << "\n";
  os << "cost_phi(u)=" << w.lemma.cost_phi << " cost_psi(u)=" << w.lemma.cost_psi << "\n";
  os << "dist_f=" << w.dist_f << " dist_g=" << w.dist_g << " final_bound=" << w.final_bound
     << "\n";
  for (std::size_t i = 0; i < w.probes.size(); ++i) {
    const Probe& p = w.probes[i];
    os << "probe " << i << " " << p.kind << " bound_f=" << p.delta_f_bound
       << " bound_g=" << p.delta_g_bound << " x=" << p.violating_x
       << " integral=" << p.integral << " min|h|_K=" << p.min_h_on_k
       << " min|k|_K=" << p.min_k_on_k << "\n";
  }
  return os.str();
}

}  // namespace aphi
