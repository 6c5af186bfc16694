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

#include <gtest/gtest.h>

#include <algorithm>
#include <tuple>

namespace aphi {
namespace {

SuiteOptions small_battery() {
  SuiteOptions o;
  o.groups = {GroupSpace::cyclic(2), GroupSpace::symmetric(3), GroupSpace::window(64)};
  o.pairs = {ComplementaryPair::make(NFunction::power(2.0)),
             ComplementaryPair::make(NFunction::entropy())};
  o.seed = 17;
  o.samples = 4;
  o.probes = 5;
  return o;
}

TEST(Suite, DefaultBatteryPasses) {
  SuiteOptions o;
  o.groups = default_battery_groups();
  o.pairs = catalog_pairs();
  const SuiteResult r = run_suite(o);
  EXPECT_TRUE(r.pass());
  EXPECT_GT(r.checks.size(), 500u);
  for (const SuiteCheck& c : r.checks) EXPECT_TRUE(c.pass) << c.group << " " << c.pair << " " << c.name;
}

TEST(Suite, ZeroToleranceIsANegativeControl) {
  SuiteOptions o = small_battery();
  o.zero_tolerance = true;
  EXPECT_FALSE(run_suite(o).pass());
}

TEST(Suite, ChecksAreSortedAndSummarized) {
  const SuiteResult r = run_suite(small_battery());
  EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(), [](const auto& a, const auto& b) {
    return std::tie(a.group, a.pair, a.name) < std::tie(b.group, b.pair, b.name);
  }));
  std::size_t total = 0;
  for (const SlackSummary& s : r.summaries()) {
    total += s.count;
    EXPECT_LE(s.p0, s.p5);
    EXPECT_LE(s.p5, s.p50);
    EXPECT_LE(s.p50, s.p95);
    EXPECT_LE(s.p95, s.p100);
  }
  EXPECT_EQ(total, r.checks.size());
}

TEST(Suite, ParallelAndSerialReportsMatch) {
  SuiteOptions o = small_battery();
  const std::string par = suite_report(run_suite(o), o).render(ReportFormat::machine);
  o.parallel = false;
  const std::string ser = suite_report(run_suite(o), o).render(ReportFormat::machine);
  EXPECT_EQ(par, ser);
}

TEST(Suite, EmptyBatteryPasses) {
  const SuiteResult r = run_suite(SuiteOptions{});
  EXPECT_TRUE(r.checks.empty());
  EXPECT_TRUE(r.pass());
}

}  // namespace
}  // namespace aphi
