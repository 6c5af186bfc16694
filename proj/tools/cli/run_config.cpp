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

#include "run_config.hpp"

#include <json.hpp>

#include "aphi/errors.hpp"

namespace aphi::cli {

namespace {

using nlohmann::json;

template <typename T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

std::pair<int, int> line_col(const std::string& text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

void RunConfig::merge(const RunConfig& o) {
  take(verb, o.verb);
  take(group, o.group);
  take(phi, o.phi);
  take(f, o.f);
  take(f_rows, o.f_rows);
  take(g, o.g);
  take(g_rows, o.g_rows);
  take(set, o.set);
  take(seed, o.seed);
  take(tol_root, o.tol_root);
  take(tol_conj, o.tol_conj);
  take(tol_check, o.tol_check);
  take(output, o.output);
  take(format, o.format);
  take(n, o.n);
  take(radius, o.radius);
  take(v_radius, o.v_radius);
  take(window, o.window);
  take(probes, o.probes);
  take(samples, o.samples);
  take(epsilon, o.epsilon);
  take(budget, o.budget);
  take(y_min, o.y_min);
  take(y_max, o.y_max);
  take(count, o.count);
  take(battery_groups, o.battery_groups);
  take(battery_pairs, o.battery_pairs);
  take(zero_tolerance, o.zero_tolerance);
}

RunConfig parse_run_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("config: malformed JSON", line, col);
  }
  if (!j.is_object()) throw ParseError("config: expected a JSON object", 1, 1);

  RunConfig c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const json& v = *it;
    const auto where = line_col(text, text.find("\"" + key + "\""));
    auto bad = [&](const char* want) {
      throw ParseError("config: '" + key + "' must be " + want, where.first, where.second);
    };
    auto str = [&](std::optional<std::string>& dst) {
      if (v.is_object() || v.is_array()) {
        dst = v.dump();  // inline spec
      } else if (v.is_string()) {
        dst = v.get<std::string>();
      } else {
        bad("a string or an inline spec");
      }
    };
    auto integer = [&](std::optional<std::int64_t>& dst) {
      if (!v.is_number_integer()) bad("an integer");
      dst = v.get<std::int64_t>();
    };
    auto number = [&](std::optional<double>& dst) {
      if (!v.is_number()) bad("a number");
      dst = v.get<double>();
    };
    auto specs = [&](std::optional<std::vector<std::string>>& dst) {
      if (!v.is_array()) bad("an array of specs");
      std::vector<std::string> out;
      for (const json& s : v) out.push_back(s.is_string() ? s.get<std::string>() : s.dump());
      dst = std::move(out);
    };

    if (key == "verb") str(c.verb);
    else if (key == "group") str(c.group);
    else if (key == "phi") str(c.phi);
    else if (key == "f") str(c.f);
    else if (key == "f_rows") str(c.f_rows);
    else if (key == "g") str(c.g);
    else if (key == "g_rows") str(c.g_rows);
    else if (key == "set") str(c.set);
    else if (key == "seed") {
      if (!v.is_number_unsigned()) bad("a nonnegative integer");
      c.seed = v.get<std::uint64_t>();
    }
    else if (key == "tol_root") number(c.tol_root);
    else if (key == "tol_conj") number(c.tol_conj);
    else if (key == "tol_check") number(c.tol_check);
    else if (key == "output") str(c.output);
    else if (key == "format") str(c.format);
    else if (key == "n") integer(c.n);
    else if (key == "R") number(c.radius);
    else if (key == "v_radius") integer(c.v_radius);
    else if (key == "window") integer(c.window);
    else if (key == "probes") integer(c.probes);
    else if (key == "samples") integer(c.samples);
    else if (key == "epsilon") number(c.epsilon);
    else if (key == "budget") integer(c.budget);
    else if (key == "y_min") number(c.y_min);
    else if (key == "y_max") number(c.y_max);
    else if (key == "count") integer(c.count);
    else if (key == "battery_groups") specs(c.battery_groups);
    else if (key == "battery_pairs") specs(c.battery_pairs);
    else if (key == "zero_tolerance") {
      if (!v.is_boolean()) bad("a boolean");
      c.zero_tolerance = v.get<bool>();
    }
    else throw ParseError("config: unknown key '" + key + "'", where.first, where.second);
  }
  return c;
}

}  // namespace aphi::cli
