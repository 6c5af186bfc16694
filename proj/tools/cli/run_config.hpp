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
#include <optional>
#include <string>
#include <vector>

namespace aphi::cli {

/// Everything a single invocation needs. Unset fields fall back to the
/// documented defaults and are echoed as such.
struct RunConfig {
  std::optional<std::string> verb;
  std::optional<std::string> group;   // path or inline JSON
  std::optional<std::string> phi;     // path or inline JSON
  std::optional<std::string> f;       // path to function rows
  std::optional<std::string> f_rows;  // inline function rows
  std::optional<std::string> g;
  std::optional<std::string> g_rows;
  std::optional<std::string> set;     // element labels / ranges

  std::optional<std::uint64_t> seed;
  std::optional<double> tol_root;
  std::optional<double> tol_conj;
  std::optional<double> tol_check;
  std::optional<std::string> output;
  std::optional<std::string> format;  // human | machine

  std::optional<std::int64_t> n;
  std::optional<double> radius;       // R
  std::optional<std::int64_t> v_radius;
  std::optional<std::int64_t> window;
  std::optional<std::int64_t> probes;
  std::optional<std::int64_t> samples;
  std::optional<double> epsilon;
  std::optional<std::int64_t> budget;
  std::optional<double> y_min;
  std::optional<double> y_max;
  std::optional<std::int64_t> count;

  std::optional<std::vector<std::string>> battery_groups;  // inline JSON specs
  std::optional<std::vector<std::string>> battery_pairs;
  std::optional<bool> zero_tolerance;

  /// Fields set in `over` replace those here.
  void merge(const RunConfig& over);
};

/// Strict JSON config: unknown keys and wrong types raise ParseError.
RunConfig parse_run_config(const std::string& text);

/// Name of the environment variable holding a default config path.
inline constexpr const char* kConfigEnv = "APHI_CONFIG";

}  // namespace aphi::cli
