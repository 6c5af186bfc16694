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

#include <cstdint>
#include <string>
#include <vector>

#include "aphi/group_space.hpp"
#include "aphi/nfunction.hpp"
#include "aphi/report.hpp"

namespace aphi {

struct SuiteOptions {
  std::vector<SpacePtr> groups;
  std::vector<ComplementaryPair> pairs;
  std::uint64_t seed = 0;
  std::size_t samples = 8;        // random functions per check and cell
  std::size_t probes = 20;        // porosity probes per window cell
  bool zero_tolerance = false;    // every agreement tolerance and slack floor forced to 0
  bool parallel = true;
};

/// Z2, Z4, Z6, Z2xZ2, S3, Zwindow(256).
std::vector<SpacePtr> default_battery_groups();

struct SuiteCheck {
  std::string group;
  std::string pair;
  std::string name;
  double slack = 0.0;
  bool pass = true;
  std::string detail;
};

struct SlackSummary {
  std::string name;
  std::size_t count = 0;
  std::size_t failed = 0;
  double p0 = 0.0;
  double p5 = 0.0;
  double p50 = 0.0;
  double p95 = 0.0;
  double p100 = 0.0;
};

struct SuiteResult {
  std::vector<SuiteCheck> checks;  // sorted by group, pair, name

  bool pass() const;
  std::vector<SlackSummary> summaries() const;
};

SuiteResult run_suite(const SuiteOptions& options);

/// Aggregated report: per-check slack percentiles and every failure.
Report suite_report(const SuiteResult& result, const SuiteOptions& options);

}  // namespace aphi
