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

#include "aphi/orlicz_norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aphi/errors.hpp"
#include "aphi/root_finding.hpp"

namespace aphi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Magnitudes of the support in ascending order. Summing in this order makes
// the modular exactly invariant under relabelings of the carrier.
std::vector<double> sorted_magnitudes(const GroupFunction& f) {
  std::vector<double> a;
  for (const Complex& v : f.values()) {
    if (v != Complex{}) a.push_back(std::abs(v));
  }
  std::sort(a.begin(), a.end());
  return a;
}

// All our spaces carry uniform Haar weights.
double uniform_weight(const GroupFunction& f) { return f.space().weight_value(0); }

double saturating_modular(const NFunction& phi, const std::vector<double>& mags,
                          double weight, double scale) {
  double s = 0.0;
  for (double a : mags) {
    const double v = phi.value_or_infinity(a * scale);
    if (!std::isfinite(v)) return kInf;
    s += v;
  }
  return s * weight;
}

}  // namespace

const char* to_string(NormMethod m) {
  switch (m) {
    case NormMethod::bisection:
      return "bisection";
    case NormMethod::amemiya_min:
      return "amemiya-min";
    case NormMethod::oracle_max:
      return "oracle-max";
    case NormMethod::closed_form:
      return "closed-form";
  }
  return "?";
}

double modular(const NFunction& phi, const GroupFunction& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::abs(f[i]) > phi.domain_cap()) {
      std::ostringstream os;
      os.precision(17);
      os << "modular: |f(" << f.space().label(i) << ")| = " << std::abs(f[i])
         << " exceeds the domain cap of " << phi.name();
      throw CapError(os.str());
    }
  }
  return saturating_modular(phi, sorted_magnitudes(f), uniform_weight(f), 1.0);
}

NormReport luxemburg(const NFunction& phi, const GroupFunction& f) {
  NormReport r;
  r.method = NormMethod::bisection;
  const auto mags = sorted_magnitudes(f);
  if (mags.empty()) return r;
  const double w = uniform_weight(f);
  auto rho_at = [&](double k) { return saturating_modular(phi, mags, w, 1.0 / k); };
  auto too_small = [&](double k) { return rho_at(k) > 1.0; };

  double hi = mags.back();
  while (too_small(hi)) {
    hi *= 2.0;
    if (!std::isfinite(hi)) throw CapError("luxemburg: no admissible scale found");
  }
  double lo = hi;
  while (!too_small(lo)) {
    lo *= 0.5;
    if (lo == 0.0) break;
  }
  const SearchResult s = bisect_boundary(too_small, lo, hi);
  r.value = std::nextafter(s.x, kInf);
  if (too_small(r.value)) r.value = hi;  // collapse at the initial bracket
  r.iterations = s.iterations;
  r.residual = std::abs(rho_at(r.value) - 1.0);
  return r;
}

double char_fn_norm(const NFunction& phi, const GroupSpace& space,
                    const ElementSet& set, const Tolerances& tol) {
  if (set.empty()) throw DomainError("char_fn_norm: the set must be nonempty");
  return 1.0 / inverse(phi, 1.0 / space.measure(set), tol);
}

NormReport orlicz_norm(const ComplementaryPair& pair, const GroupFunction& f,
                       const OrliczOptions& options) {
  NormReport r;
  r.method = NormMethod::amemiya_min;
  const auto mags = sorted_magnitudes(f);
  if (mags.empty()) {
    if (options.cross_check) r.cross_check = 0.0;
    return r;
  }
  const double w = uniform_weight(f);
  const NFunction& phi = pair.phi();
  auto h = [&](double k) { return (1.0 + saturating_modular(phi, mags, w, k)) / k; };

  double k = 1.0 / mags.back();
  std::size_t guard = 0;
  while (h(2.0 * k) < h(k) && ++guard < 2100) k *= 2.0;
  while (h(0.5 * k) < h(k) && ++guard < 4200) k *= 0.5;
  const SearchResult s = golden_minimize(h, 0.5 * k, 2.0 * k);
  r.value = h(s.x);
  r.iterations = s.iterations + guard;
  r.residual = s.width / s.x;

  if (options.cross_check) {
    const OracleResult o = orlicz_oracle(pair, f);
    r.cross_check = o.report.value;
    const double diff = std::abs(o.report.value - r.value);
    if (o.report.flagged) {
      r.flagged = true;
      r.note = "oracle: " + o.report.note;
    } else if (diff > options.agreement * r.value) {
      r.flagged = true;
      std::ostringstream os;
      os.precision(17);
      os << "min-formula " << r.value << " and oracle " << o.report.value
         << " disagree by " << diff;
      r.note = os.str();
    }
  }
  return r;
}

OracleResult orlicz_oracle(const ComplementaryPair& pair, const GroupFunction& f) {
  OracleResult out{NormReport{}, GroupFunction(f.space_ptr())};
  out.report.method = NormMethod::oracle_max;
  if (f.is_zero()) return out;

  const NFunction& psi = pair.psi();
  const double w = uniform_weight(f);
  const ElementSet supp = f.support();

  // g(x) = (Psi')^{-1}(|f(x)|/mu) is the maximizer of s g - Psi(g) at s = |f(x)|/mu.
  auto candidate = [&](double mu, GroupFunction* g) {
    double c = 0.0;
    for (std::size_t x : supp) {
      const ConjugateValue cv = conjugate_at(psi, std::abs(f[x]) / mu);
      if (cv.truncated) return kInf;
      const double v = psi.value_or_infinity(cv.maximizer);
      if (!std::isfinite(v)) return kInf;
      c += v;
      if (g) (*g)[x] = cv.maximizer;
    }
    return c * w;
  };
  auto infeasible = [&](double mu) { return !(candidate(mu, nullptr) <= 1.0); };

  double hi = f.sup_norm();
  std::size_t steps = 0;
  while (infeasible(hi) && steps < 2000) {
    hi *= 2.0;
    ++steps;
  }
  double lo = hi;
  while (!infeasible(lo) && steps < 4000) {
    lo *= 0.5;
    ++steps;
  }
  if (infeasible(hi) || !infeasible(lo)) {
    out.report.flagged = true;
    out.report.note = "could not bracket the Lagrange multiplier";
    return out;
  }
  const SearchResult s = bisect_boundary(infeasible, lo, hi);
  double mu = std::nextafter(s.x, kInf);
  if (infeasible(mu)) mu = hi;
  const double constraint = candidate(mu, &out.maximizer);
  out.report.value = pairing(f, out.maximizer);
  out.report.iterations = s.iterations + steps;
  out.report.residual = std::abs(1.0 - constraint);
  return out;
}

double pairing(const GroupFunction& f, const GroupFunction& g) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    s += std::abs(f[i]) * std::abs(g[i]) * f.space().weight_value(i);
  }
  return s;
}

}  // namespace aphi
