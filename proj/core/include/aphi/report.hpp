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

#pragma once

#include <string>
#include <vector>

#include "aphi/aphi_core.hpp"
#include "aphi/nfunction.hpp"

namespace aphi {

enum class ReportFormat { human, machine };

/// Shortest round-trip decimal form; "inf", "-inf", "nan" for the rest.
std::string format_double(double v);

/// Where a reported number came from.
enum class Provenance { input, defaulted, computed, closed_form };
const char* to_string(Provenance p);

struct ReportValue {
  std::string key;
  std::string value;
  Provenance provenance = Provenance::computed;
};

struct ReportCheck {
  std::string name;
  std::string lhs;
  std::string relation;
  std::string rhs;
  double slack = 0.0;
  bool pass = true;
};

/// Structured report: echoed inputs, computed values and checks, rendered
/// either as aligned text or as line-oriented key=value records whose key
/// order is the insertion order.
class Report {
 public:
  explicit Report(std::string verb) : verb_(std::move(verb)) {}

  void input(const std::string& key, const std::string& value, bool defaulted = false);
  /// Re-labels an already echoed input as defaulted.
  void mark_default(const std::string& key);
  void value(const std::string& key, const std::string& value,
             Provenance p = Provenance::computed);
  void value(const std::string& key, double v, Provenance p = Provenance::computed);
  void check(const std::string& name, double lhs, const std::string& relation, double rhs,
             double slack, bool pass);
  void check(const std::string& name, bool pass, double slack = 0.0);
  void check(const InequalityStep& step, const std::string& prefix = {},
             double slack_floor = -1e-9);
  void check(const PropertyCheck& c, const std::string& prefix = {});
  void note(const std::string& text) { notes_.push_back(text); }
  void set_elapsed(double seconds) { elapsed_ = seconds; }

  bool pass() const;
  std::size_t failures() const;
  const std::string& verb() const { return verb_; }
  const std::vector<ReportCheck>& checks() const { return checks_; }

  /// Machine output never includes wall-clock time.
  std::string render(ReportFormat format) const;

 private:
  std::string verb_;
  std::vector<ReportValue> inputs_;
  std::vector<ReportValue> values_;
  std::vector<ReportCheck> checks_;
  std::vector<std::string> notes_;
  double elapsed_ = -1.0;
};

}  // namespace aphi
