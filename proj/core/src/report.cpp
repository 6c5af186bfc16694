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

#include "aphi/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace aphi {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::input:
      return "input";
    case Provenance::defaulted:
      return "default";
    case Provenance::computed:
      return "computed";
    case Provenance::closed_form:
      return "closed-form";
  }
  return "?";
}

void Report::input(const std::string& key, const std::string& value, bool defaulted) {
  inputs_.push_back({key, value, defaulted ? Provenance::defaulted : Provenance::input});
}

void Report::value(const std::string& key, const std::string& value, Provenance p) {
  values_.push_back({key, value, p});
}

void Report::value(const std::string& key, double v, Provenance p) {
  value(key, format_double(v), p);
}

void Report::check(const std::string& name, double lhs, const std::string& relation, double rhs,
                   double slack, bool pass) {
  checks_.push_back({name, format_double(lhs), relation, format_double(rhs), slack, pass});
}

void Report::check(const std::string& name, bool pass, double slack) {
  checks_.push_back({name, pass ? "true" : "false", "==", "true", slack, pass});
}

void Report::check(const InequalityStep& step, const std::string& prefix, double slack_floor) {
  const double s = step.slack();
  const bool ok = step.relation == InequalityStep::Relation::equal ? step.holds()
                                                                   : s >= slack_floor;
  check(prefix + step.name, step.lhs, to_string(step.relation), step.rhs, s, ok);
}

void Report::check(const PropertyCheck& c, const std::string& prefix) {
  checks_.push_back({prefix + c.name, c.detail.empty() ? "-" : c.detail, "slack>=", "0",
                     c.worst_slack, c.pass});
}

void Report::mark_default(const std::string& key) {
  for (auto& v : inputs_) {
    if (v.key == key) v.provenance = Provenance::defaulted;
  }
}

bool Report::pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const ReportCheck& c) { return !c.pass; }));
}

namespace {

// Keeps machine records on one line.
std::string flat(const std::string& s) {
  std::string out = s;
  std::replace(out.begin(), out.end(), '\n', ' ');
  return out;
}

}  // namespace

std::string Report::render(ReportFormat format) const {
  std::ostringstream os;
  if (format == ReportFormat::machine) {
    os << "report.verb=" << verb_ << "\n";
    for (const auto& v : inputs_) {
      os << "input." << v.key << "=" << flat(v.value) << "\n";
      os << "input." << v.key << ".source=" << to_string(v.provenance) << "\n";
    }
    for (const auto& v : values_) {
      os << "value." << v.key << "=" << flat(v.value) << "\n";
      os << "value." << v.key << ".source=" << to_string(v.provenance) << "\n";
    }
    for (std::size_t i = 0; i < checks_.size(); ++i) {
      const ReportCheck& c = checks_[i];
      const std::string p = "check." + std::to_string(i) + ".";
      os << p << "name=" << c.name << "\n"
         << p << "lhs=" << flat(c.lhs) << "\n"
         << p << "relation=" << c.relation << "\n"
         << p << "rhs=" << flat(c.rhs) << "\n"
         << p << "slack=" << format_double(c.slack) << "\n"
         << p << "pass=" << (c.pass ? "true" : "false") << "\n";
    }
    for (std::size_t i = 0; i < notes_.size(); ++i) {
      os << "note." << i << "=" << flat(notes_[i]) << "\n";
    }
    os << "summary.checks=" << checks_.size() << "\n"
       << "summary.failed=" << failures() << "\n"
       << "summary.status=" << (pass() ? "pass" : "fail") << "\n";
    return os.str();
  }

  os << verb_ << "\n";
  std::size_t width = 0;
  for (const auto& v : inputs_) width = std::max(width, v.key.size());
  for (const auto& v : values_) width = std::max(width, v.key.size());
  if (!inputs_.empty()) os << "\ninputs\n";
  for (const auto& v : inputs_) {
    os << "  " << std::left << std::setw(static_cast<int>(width)) << v.key << "  " << v.value;
    if (v.provenance == Provenance::defaulted) os << "  (default)";
    os << "\n";
  }
  if (!values_.empty()) os << "\nresults\n";
  for (const auto& v : values_) {
    os << "  " << std::left << std::setw(static_cast<int>(width)) << v.key << "  " << v.value
       << "  [" << to_string(v.provenance) << "]\n";
  }
  if (!checks_.empty()) os << "\nchecks\n";
  for (const auto& c : checks_) {
    os << "  " << (c.pass ? "ok  " : "FAIL") << "  " << c.name << ": " << c.lhs << " "
       << c.relation << " " << c.rhs << "  (slack " << format_double(c.slack) << ")\n";
  }
  for (const auto& n : notes_) os << "\nnote: " << n << "\n";
  os << "\n" << (pass() ? "PASS" : "FAIL") << "  " << checks_.size() - failures() << "/"
     << checks_.size() << " checks";
  if (elapsed_ >= 0.0) os << "  elapsed " << std::fixed << std::setprecision(3) << elapsed_ << " s";
  os << "\n";
  return os.str();
}

}  // namespace aphi
