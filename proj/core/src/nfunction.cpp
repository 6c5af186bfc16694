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

#include "aphi/nfunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "aphi/errors.hpp"
#include "aphi/root_finding.hpp"

namespace aphi {

namespace detail {

class NFunctionModel {
 public:
  virtual ~NFunctionModel() = default;

  // x >= 0. May return +inf or a value above kOverflowThreshold.
  virtual double raw(double x) const = 0;
  virtual bool has_slope() const { return true; }
  virtual double slope(double x) const = 0;
  virtual NFunctionKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual std::optional<double> exponent() const { return std::nullopt; }
  virtual std::optional<NFunction> complement() const { return std::nullopt; }

  double cap() const { return cap_; }
  void set_cap(double c) { cap_ = c; }

 private:
  double cap_ = std::numeric_limits<double>::infinity();
};

}  // namespace detail

namespace {

using detail::NFunctionModel;

bool finite_below_threshold(double v) {
  return std::isfinite(v) && v <= kOverflowThreshold;
}

// Largest x in [0, limit] with raw(x) below the overflow threshold.
double compute_cap(const NFunctionModel& m, double limit = kOverflowThreshold) {
  auto ok = [&](double x) { return finite_below_threshold(m.raw(x)); };
  const Bracket b = expand_upper(ok, 1.0, limit);
  if (!b.found) return limit;
  return bisect_boundary(ok, b.lo, b.hi).x;
}

// sum_{k>=2} (-1)^k x^k / (k (k-1)); (1+x) log(1+x) - x for small x.
double entropy_series(double x) {
  double term = x;
  double sum = 0.0;
  for (int k = 2; k < 200; ++k) {
    term *= x;
    const double add = (k % 2 == 0 ? term : -term) / (double(k) * double(k - 1));
    sum += add;
    if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// sum_{k>=2} y^k / k!; e^y - y - 1 for small y.
double exp_series(double y) {
  double term = y;
  double sum = 0.0;
  for (int k = 2; k < 200; ++k) {
    term *= y / double(k);
    sum += term;
    if (term <= 1e-18 * sum) break;
  }
  return sum;
}

class PowerModel final : public NFunctionModel {
 public:
  explicit PowerModel(double p) : p_(p) {}
  double raw(double x) const override { return std::pow(x, p_) / p_; }
  double slope(double x) const override { return std::pow(x, p_ - 1.0); }
  NFunctionKind kind() const override { return NFunctionKind::power; }
  std::string name() const override {
    std::ostringstream os;
    os << "power(p=" << p_ << ")";
    return os.str();
  }
  std::optional<double> exponent() const override { return p_; }
  std::optional<NFunction> complement() const override {
    return NFunction::power(p_ / (p_ - 1.0));
  }

 private:
  double p_;
};

class EntropyModel final : public NFunctionModel {
 public:
  double raw(double x) const override {
    if (x < 0.5) return entropy_series(x);
    return (1.0 + x) * std::log1p(x) - x;
  }
  double slope(double x) const override { return std::log1p(x); }
  NFunctionKind kind() const override { return NFunctionKind::entropy; }
  std::string name() const override { return "entropy"; }
  std::optional<NFunction> complement() const override {
    return NFunction::exp_complement();
  }
};

class ExpComplementModel final : public NFunctionModel {
 public:
  double raw(double y) const override {
    if (y < 0.5) return exp_series(y);
    return std::expm1(y) - y;
  }
  double slope(double y) const override { return std::expm1(y); }
  NFunctionKind kind() const override { return NFunctionKind::exp_complement; }
  std::string name() const override { return "exp-complement"; }
  std::optional<NFunction> complement() const override {
    return NFunction::entropy();
  }
};

class CoshModel final : public NFunctionModel {
 public:
  double raw(double x) const override {
    const double s = std::sinh(0.5 * x);
    return 2.0 * s * s;
  }
  double slope(double x) const override { return std::sinh(x); }
  NFunctionKind kind() const override { return NFunctionKind::cosh; }
  std::string name() const override { return "cosh"; }
  std::optional<NFunction> complement() const override {
    return NFunction::cosh_complement();
  }
};

class CoshComplementModel final : public NFunctionModel {
 public:
  double raw(double y) const override {
    // sqrt(1+y^2) - 1 rewritten to avoid cancellation near 0.
    const double r = std::hypot(1.0, y);
    return y * std::asinh(y) - y * y / (r + 1.0);
  }
  double slope(double y) const override { return std::asinh(y); }
  NFunctionKind kind() const override { return NFunctionKind::cosh_complement; }
  std::string name() const override { return "cosh-complement"; }
  std::optional<NFunction> complement() const override {
    return NFunction::cosh();
  }
};

class TabulatedModel final : public NFunctionModel {
 public:
  explicit TabulatedModel(std::vector<TablePoint> rows) : rows_(std::move(rows)) {
    cumulative_.resize(rows_.size(), 0.0);
    for (std::size_t i = 1; i < rows_.size(); ++i) {
      const double h = rows_[i].x - rows_[i - 1].x;
      cumulative_[i] =
          cumulative_[i - 1] + 0.5 * h * (rows_[i].slope + rows_[i - 1].slope);
    }
  }

  double raw(double x) const override {
    const std::size_t i = segment(x);
    const double dx = x - rows_[i].x;
    const double s0 = rows_[i].slope;
    return cumulative_[i] + dx * s0 + 0.5 * dx * dx * gradient(i);
  }
  double slope(double x) const override {
    const std::size_t i = segment(x);
    return rows_[i].slope + (x - rows_[i].x) * gradient(i);
  }
  NFunctionKind kind() const override { return NFunctionKind::custom; }
  std::string name() const override {
    return "tabulated(" + std::to_string(rows_.size()) + " rows)";
  }
  double integrated_at(std::size_t i) const { return cumulative_[i]; }

 private:
  // Index of the segment [x_i, x_{i+1}) containing x; the last segment
  // extends to infinity with the final slope gradient.
  std::size_t segment(double x) const {
    auto it = std::upper_bound(rows_.begin(), rows_.end(), x,
                               [](double v, const TablePoint& p) { return v < p.x; });
    std::size_t i = static_cast<std::size_t>(it - rows_.begin());
    i = i == 0 ? 0 : i - 1;
    return std::min(i, rows_.size() - 2);
  }
  double gradient(std::size_t i) const {
    return (rows_[i + 1].slope - rows_[i].slope) / (rows_[i + 1].x - rows_[i].x);
  }

  std::vector<TablePoint> rows_;
  std::vector<double> cumulative_;
};

class FunctionModel final : public NFunctionModel {
 public:
  FunctionModel(std::string name, NFunction::Function value,
                NFunction::Function derivative)
      : name_(std::move(name)),
        value_(std::move(value)),
        derivative_(std::move(derivative)) {}
  double raw(double x) const override { return value_(x); }
  bool has_slope() const override { return static_cast<bool>(derivative_); }
  double slope(double x) const override {
    if (!derivative_) throw DomainError(name_ + ": no derivative supplied");
    return derivative_(x);
  }
  NFunctionKind kind() const override { return NFunctionKind::custom; }
  std::string name() const override { return name_; }

 private:
  std::string name_;
  NFunction::Function value_;
  NFunction::Function derivative_;
};

class ConjugateModel final : public NFunctionModel {
 public:
  ConjugateModel(NFunction parent, Tolerances tol)
      : parent_(std::move(parent)), tol_(tol) {}

  double raw(double y) const override { return lookup(y).value; }
  double slope(double y) const override { return lookup(y).maximizer; }
  NFunctionKind kind() const override { return NFunctionKind::conjugate; }
  std::string name() const override { return "conjugate(" + parent_.name() + ")"; }
  std::optional<NFunction> complement() const override { return parent_; }

  void memoize(double y) const {
    const ConjugateValue v = conjugate_at(parent_, y, tol_);
    std::lock_guard lock(mutex_);
    memo_.emplace(y, v);
  }

  const NFunction& parent() const { return parent_; }

 private:
  ConjugateValue lookup(double y) const {
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(y);
      if (it != memo_.end()) return it->second;
    }
    return conjugate_at(parent_, y, tol_);
  }

  NFunction parent_;
  Tolerances tol_;
  mutable std::mutex mutex_;
  mutable std::map<double, ConjugateValue> memo_;
};

template <class Model, class... Args>
NFunction finalize(Args&&... args) {
  auto m = std::make_shared<Model>(std::forward<Args>(args)...);
  m->set_cap(compute_cap(*m));
  return NFunction(std::move(m));
}

}  // namespace

NFunction::NFunction(std::shared_ptr<const detail::NFunctionModel> model)
    : model_(std::move(model)) {}

NFunction NFunction::power(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("power N-function needs 1 < p < inf");
  }
  return finalize<PowerModel>(p);
}

NFunction NFunction::entropy() { return finalize<EntropyModel>(); }
NFunction NFunction::cosh() { return finalize<CoshModel>(); }
NFunction NFunction::exp_complement() { return finalize<ExpComplementModel>(); }
NFunction NFunction::cosh_complement() { return finalize<CoshComplementModel>(); }

NFunction NFunction::tabulated(std::vector<TablePoint> rows) {
  if (rows.size() < 2) throw DomainError("tabulated N-function needs >= 2 rows");
  std::sort(rows.begin(), rows.end(),
            [](const TablePoint& a, const TablePoint& b) { return a.x < b.x; });
  if (rows.front().x != 0.0 || rows.front().value != 0.0 ||
      rows.front().slope != 0.0) {
    throw DomainError("tabulated N-function must start with row (0, 0, 0)");
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].x > rows[i - 1].x)) {
      throw DomainError("tabulated x values must be strictly increasing");
    }
    if (rows[i].slope < rows[i - 1].slope) {
      throw ConvexityError("tabulated derivative decreases at x = " +
                           std::to_string(rows[i].x) + " (Phi not convex)");
    }
  }
  if (!(rows[1].slope > 0.0) || !(rows.back().slope > rows[rows.size() - 2].slope)) {
    throw DomainError(
        "tabulated derivative must be positive after 0 and strictly growing on "
        "the last segment");
  }
  auto model = std::make_shared<TabulatedModel>(rows);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double integrated = model->integrated_at(i);
    if (std::abs(integrated - rows[i].value) > 1e-3 * (1e-12 + std::abs(rows[i].value))) {
      std::ostringstream os;
      os << "tabulated Phi(" << rows[i].x << ") = " << rows[i].value
         << " disagrees with the integral of the derivative (" << integrated << ")";
      throw DomainError(os.str());
    }
  }
  model->set_cap(compute_cap(*model));
  return NFunction(std::move(model));
}

NFunction NFunction::from_functions(std::string name, Function value,
                                    Function derivative) {
  if (!value) throw DomainError("N-function evaluator missing");
  auto m = std::make_shared<FunctionModel>(std::move(name), std::move(value),
                                           std::move(derivative));
  if (m->raw(0.0) != 0.0) throw DomainError(m->name() + ": Phi(0) must be 0");
  m->set_cap(compute_cap(*m));
  return NFunction(std::move(m));
}

double NFunction::operator()(double x) const {
  x = std::abs(x);
  if (x > model_->cap()) {
    std::ostringstream os;
    os.precision(17);
    os << name() << ": argument " << x << " exceeds domain cap " << model_->cap();
    throw CapError(os.str());
  }
  return model_->raw(x);
}

double NFunction::value_or_infinity(double x) const {
  x = std::abs(x);
  if (x > model_->cap()) return std::numeric_limits<double>::infinity();
  return model_->raw(x);
}

double NFunction::derivative(double x) const {
  x = std::abs(x);
  if (x > model_->cap()) {
    throw CapError(name() + ": derivative requested beyond domain cap");
  }
  return model_->slope(x);
}

bool NFunction::has_derivative() const { return model_->has_slope(); }
double NFunction::domain_cap() const { return model_->cap(); }
NFunctionKind NFunction::kind() const { return model_->kind(); }
std::string NFunction::name() const { return model_->name(); }
std::optional<double> NFunction::exponent() const { return model_->exponent(); }

std::optional<NFunction> NFunction::closed_form_complement() const {
  if (kind() == NFunctionKind::custom || kind() == NFunctionKind::conjugate) {
    return std::nullopt;
  }
  return model_->complement();
}

ConjugateValue conjugate_at(const NFunction& phi, double y, const Tolerances& tol) {
  y = std::abs(y);
  if (y == 0.0) return {};
  const double cap = phi.domain_cap();
  ConjugateValue out;

  if (phi.has_derivative()) {
    if (phi.derivative(cap) < y) {
      out.maximizer = cap;
      out.value = cap * y - phi(cap);
      out.truncated = true;
      return out;
    }
    // Bracket the boundary of {x : phi'(x) <= y}, checking monotonicity.
    double lo = 0.0;
    double hi = 1.0;
    double prev = phi.derivative(0.0);
    while (hi < cap) {
      const double s = phi.derivative(hi);
      if (s < prev) {
        std::ostringstream os;
        os << phi.name() << ": derivative decreases near x = " << hi
           << " (not convex)";
        throw ConvexityError(os.str());
      }
      prev = s;
      if (s > y) break;
      lo = hi;
      hi *= 2.0;
    }
    hi = std::min(hi, cap);
    const SearchResult r = bisect_boundary(
        [&](double x) { return phi.derivative(x) <= y; }, lo, hi, tol.root);
    out.maximizer = r.x;
    out.value = r.x * y - phi(r.x);
    return out;
  }

  // No derivative: golden-section on the concave map x -> xy - Phi(x).
  auto gain = [&](double x) { return x * y - phi(x); };
  auto check_midpoint = [&](double a, double b) {
    const double fa = phi(a), fb = phi(b), fm = phi(0.5 * (a + b));
    if (fm > 0.5 * (fa + fb) + 1e-12 * (1.0 + fb)) {
      std::ostringstream os;
      os << phi.name() << ": midpoint convexity fails on [" << a << ", " << b << "]";
      throw ConvexityError(os.str());
    }
  };
  double b = 1.0;
  while (2.0 * b <= cap && gain(2.0 * b) >= gain(b)) {
    check_midpoint(b, 2.0 * b);
    b *= 2.0;
  }
  if (2.0 * b > cap && gain(cap) >= gain(b)) {
    check_midpoint(b, cap);
    if (gain(cap) > gain(std::nextafter(cap, 0.0))) {
      out.maximizer = cap;
      out.value = gain(cap);
      out.truncated = true;
      return out;
    }
  }
  const double a = b == 1.0 ? 0.0 : 0.5 * b;
  const double hi = std::min(2.0 * b, cap);
  check_midpoint(a, hi);
  const SearchResult r =
      golden_minimize([&](double x) { return -gain(x); }, a, hi, tol.root);
  out.maximizer = r.x;
  out.value = std::max(gain(r.x), 0.0);
  return out;
}

NFunction conjugate(const NFunction& phi, std::span<const double> grid,
                    const Tolerances& tol) {
  auto model = std::make_shared<ConjugateModel>(phi, tol);
  double cap;
  if (phi.has_derivative()) {
    cap = phi.derivative(phi.domain_cap());
  } else {
    const double c = phi.domain_cap();
    const double h = 1e-6 * c;
    cap = (phi(c) - phi(c - h)) / h;
  }
  model->set_cap(compute_cap(*model, cap));
  for (double y : grid) {
    if (y >= 0.0 && y <= model->cap()) model->memoize(y);
  }
  return NFunction(std::move(model));
}

double inverse(const NFunction& phi, double t, const Tolerances& tol) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("inverse: argument must be finite and >= 0");
  }
  if (t == 0.0) return 0.0;
  const double cap = phi.domain_cap();
  if (t > phi(cap)) {
    std::ostringstream os;
    os.precision(17);
    os << phi.name() << ": inverse of " << t << " exceeds Phi(domain cap)";
    throw CapError(os.str());
  }
  auto below = [&](double x) { return phi(x) < t; };
  const Bracket b = expand_upper(below, 1.0, cap);
  const SearchResult r = bisect_boundary(below, b.lo, b.hi);
  // Both ends of the collapsed bracket are candidates.
  const double hi = std::nextafter(r.x, cap);
  const double x = std::abs(phi(hi) - t) < std::abs(phi(r.x) - t) ? hi : r.x;
  (void)tol;
  return x;
}

ComplementaryPair ComplementaryPair::make(NFunction phi) {
  if (auto c = phi.closed_form_complement()) {
    return ComplementaryPair(std::move(phi), *c, Construction::closed_form);
  }
  return numeric(std::move(phi));
}

ComplementaryPair ComplementaryPair::numeric(NFunction phi,
                                             std::span<const double> grid) {
  NFunction psi = conjugate(phi, grid);
  return ComplementaryPair(std::move(phi), std::move(psi), Construction::numeric);
}

ComplementaryPair ComplementaryPair::closed_form(NFunction phi) {
  auto c = phi.closed_form_complement();
  if (!c) throw DomainError(phi.name() + " has no closed-form complement");
  return ComplementaryPair(std::move(phi), *c, Construction::closed_form);
}

std::string ComplementaryPair::name() const {
  return phi_.name() + "|" + psi_.name();
}

ComplementaryPair ComplementaryPair::swapped() const {
  return ComplementaryPair(psi_, phi_, construction_);
}

std::vector<ComplementaryPair> catalog_pairs() {
  return {ComplementaryPair::make(NFunction::power(2.0)),
          ComplementaryPair::make(NFunction::power(3.0)),
          ComplementaryPair::make(NFunction::entropy()),
          ComplementaryPair::make(NFunction::cosh())};
}

double young_gap(const ComplementaryPair& pair, double x, double y) {
  x = std::abs(x);
  y = std::abs(y);
  return pair.phi()(x) + pair.psi()(y) - x * y;
}

double inverse_product_ratio(const ComplementaryPair& pair, double t,
                             const Tolerances& tol) {
  if (!(t > 0.0)) throw DomainError("inverse_product_ratio: t must be > 0");
  return inverse(pair.phi(), t, tol) * inverse(pair.psi(), t, tol) / t;
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t count) {
  std::vector<double> g;
  if (count == 0) return g;
  if (count == 1) return {lo};
  g.reserve(count);
  const double step = std::log(hi / lo) / double(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    g.push_back(i + 1 == count ? hi : lo * std::exp(step * double(i)));
  }
  return g;
}

namespace {

PropertyCheck make_check(std::string name, double worst, bool pass,
                         std::string detail = {}) {
  return PropertyCheck{std::move(name), worst, pass, std::move(detail)};
}

std::vector<double> capped_grid(const NFunction& f, double lo, double hi,
                                std::size_t count) {
  std::vector<double> g;
  for (double x : geometric_grid(lo, hi, count)) {
    if (x <= f.domain_cap()) g.push_back(x);
  }
  return g;
}

}  // namespace

std::vector<PropertyCheck> check_axioms(const NFunction& phi, const Tolerances&) {
  std::vector<PropertyCheck> out;
  const double at0 = phi(0.0);
  out.push_back(make_check("phi(0)=0", -std::abs(at0), at0 == 0.0));

  const auto grid = capped_grid(phi, 1e-6, 1e6, 61);
  double worst_convex = std::numeric_limits<double>::infinity();
  double worst_mono = std::numeric_limits<double>::infinity();
  double worst_growth = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double b = grid[i];
    const double a = i == 0 ? 0.0 : grid[i - 1];
    const double fa = phi(a), fb = phi(b), fm = phi(0.5 * (a + b));
    worst_convex = std::min(worst_convex, 0.5 * (fa + fb) + 1e-12 * (1.0 + fb) - fm);
    if (i > 0) {
      worst_mono = std::min(worst_mono, fb - fa);
      worst_growth = std::min(worst_growth, fb / b - fa / a);
    }
  }
  out.push_back(make_check("convexity", worst_convex, worst_convex >= 0.0));
  out.push_back(make_check("strictly-increasing", worst_mono, worst_mono > 0.0));
  std::ostringstream os;
  os.precision(6);
  if (!grid.empty()) {
    os << "Phi(x)/x from " << phi(grid.front()) / grid.front() << " at x="
       << grid.front() << " to " << phi(grid.back()) / grid.back()
       << " at x=" << grid.back();
  }
  // Phi(x)/x must increase strictly and span several orders of magnitude,
  // the grid stand-in for the limits 0 and infinity.
  bool spans = false;
  if (grid.size() >= 2) {
    const double first = phi(grid.front()) / grid.front();
    const double last = phi(grid.back()) / grid.back();
    spans = first < 1e-2 * last;
  }
  out.push_back(make_check("growth-of-phi(x)/x", worst_growth,
                           worst_growth > 0.0 && spans, os.str()));
  return out;
}

std::vector<PropertyCheck> check_pair(const ComplementaryPair& pair,
                                      const Tolerances& tol) {
  std::vector<PropertyCheck> out;
  const NFunction& phi = pair.phi();
  const NFunction& psi = pair.psi();

  double worst_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const double x = 0.25 * i, y = 0.25 * j;
      if (x > phi.domain_cap() || y > psi.domain_cap()) continue;
      const double fx = phi(x), gy = psi(y);
      const double gap = fx + gy - x * y;
      worst_gap = std::min(worst_gap, gap + tol.check * (1.0 + fx + gy));
    }
  }
  out.push_back(make_check("young-inequality", worst_gap, worst_gap >= 0.0));

  double worst_eq = std::numeric_limits<double>::infinity();
  if (phi.has_derivative()) {
    for (double x : capped_grid(phi, 1e-3, 1e2, 31)) {
      const double y = phi.derivative(x);
      if (y > psi.domain_cap()) continue;
      const double gap = young_gap(pair, x, y);
      worst_eq = std::min(worst_eq, 1e-8 * (1.0 + phi(x)) - std::abs(gap));
    }
    out.push_back(make_check("young-equality-case", worst_eq, worst_eq >= 0.0));
  }

  const NFunction bi = conjugate(psi, {}, tol);
  double worst_bi = std::numeric_limits<double>::infinity();
  for (double x : capped_grid(phi, 1e-2, 1e2, 21)) {
    if (x > bi.domain_cap()) continue;
    const double want = phi(x);
    const double got = bi(x);
    worst_bi = std::min(worst_bi, 1e-6 * std::abs(want) - std::abs(got - want));
  }
  out.push_back(make_check("biconjugacy", worst_bi, worst_bi >= 0.0));
  return out;
}

}  // namespace aphi
