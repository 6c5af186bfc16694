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

#include "aphi/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "aphi/errors.hpp"
#include "json.hpp"

namespace aphi {

namespace {

using nlohmann::json;

struct Position {
  int line = 1;
  int column = 1;
};

Position position_at(std::string_view text, std::size_t offset) {
  Position p;
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// JSON DOMs carry no positions; semantic errors point at the first
// occurrence of the offending key, or the start of the text.
class SpecReader {
 public:
  explicit SpecReader(std::string_view text) : text_(text) {}

  json parse() const {
    try {
      return json::parse(text_.begin(), text_.end());
    } catch (const json::parse_error& e) {
      const std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
      const Position p = position_at(text_, off);
      std::string msg = e.what();
      if (auto pos = msg.find("; "); pos != std::string::npos) msg = msg.substr(pos + 2);
      throw ParseError("malformed JSON: " + msg, p.line, p.column);
    }
  }

  [[noreturn]] void fail(const std::string& what, std::string_view key = {}) const {
    Position p;
    if (!key.empty()) {
      const std::string needle = "\"" + std::string(key) + "\"";
      if (auto at = text_.find(needle); at != std::string_view::npos) p = position_at(text_, at);
    }
    throw ParseError(what, p.line, p.column);
  }

  const json& object(const json& j, std::string_view where) const {
    if (!j.is_object()) fail(std::string(where) + ": expected a JSON object");
    return j;
  }

  void only_keys(const json& j, std::initializer_list<std::string_view> keys,
                 std::string_view where) const {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
        fail(std::string(where) + ": unknown key '" + it.key() + "'", it.key());
      }
    }
  }

  const json& field(const json& j, std::string_view key, std::string_view where) const {
    auto it = j.find(std::string(key));
    if (it == j.end()) fail(std::string(where) + ": missing key '" + std::string(key) + "'");
    return *it;
  }

  std::string string_field(const json& j, std::string_view key, std::string_view where) const {
    const json& v = field(j, key, where);
    if (!v.is_string()) fail(std::string(where) + ": '" + std::string(key) + "' must be a string", key);
    return v.get<std::string>();
  }

  std::int64_t int_field(const json& j, std::string_view key, std::string_view where) const {
    const json& v = field(j, key, where);
    if (!v.is_number_integer()) {
      fail(std::string(where) + ": '" + std::string(key) + "' must be an integer", key);
    }
    return v.get<std::int64_t>();
  }

  double number_field(const json& j, std::string_view key, std::string_view where) const {
    const json& v = field(j, key, where);
    if (!v.is_number()) fail(std::string(where) + ": '" + std::string(key) + "' must be a number", key);
    return v.get<double>();
  }

 private:
  std::string_view text_;
};

std::string label_of(const SpecReader& r, const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  r.fail("table: element labels must be strings or integers");
}

SpacePtr group_from(const SpecReader& r, const json& j) {
  r.object(j, "group");
  const std::string type = r.string_field(j, "type", "group");
  try {
    if (type == "Zn") {
      r.only_keys(j, {"type", "n"}, "group Zn");
      const auto n = r.int_field(j, "n", "group Zn");
      if (n < 1) r.fail("group Zn: n must be >= 1", "n");
      return GroupSpace::cyclic(static_cast<std::size_t>(n));
    }
    if (type == "Zwindow") {
      r.only_keys(j, {"type", "radius"}, "group Zwindow");
      const auto w = r.int_field(j, "radius", "group Zwindow");
      if (w < 0) r.fail("group Zwindow: radius must be >= 0", "radius");
      return GroupSpace::window(w);
    }
    if (type == "S") {
      r.only_keys(j, {"type", "n"}, "group S");
      const auto n = r.int_field(j, "n", "group S");
      if (n < 1 || n > 5) r.fail("group S: n must be in 1..5", "n");
      return GroupSpace::symmetric(static_cast<std::size_t>(n));
    }
    if (type == "product") {
      r.only_keys(j, {"type", "factors"}, "group product");
      const json& fs = r.field(j, "factors", "group product");
      if (!fs.is_array() || fs.empty()) r.fail("group product: 'factors' must be a nonempty array", "factors");
      std::vector<SpacePtr> factors;
      for (const json& f : fs) factors.push_back(group_from(r, f));
      return GroupSpace::product(std::move(factors));
    }
    if (type == "table") {
      r.only_keys(j, {"type", "elements", "mul", "identity", "inv"}, "group table");
      const json& el = r.field(j, "elements", "group table");
      if (!el.is_array() || el.empty()) r.fail("group table: 'elements' must be a nonempty array", "elements");
      std::vector<std::string> labels;
      for (const json& e : el) labels.push_back(label_of(r, e));
      auto index = [&](const json& v, std::string_view key) {
        const std::string l = label_of(r, v);
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) r.fail("group table: unknown element '" + l + "'", key);
        return static_cast<std::size_t>(it - labels.begin());
      };
      const json& mul = r.field(j, "mul", "group table");
      if (!mul.is_array() || mul.size() != labels.size()) {
        r.fail("group table: 'mul' must have one row per element", "mul");
      }
      std::vector<std::vector<std::size_t>> table;
      for (const json& row : mul) {
        if (!row.is_array() || row.size() != labels.size()) {
          r.fail("group table: every 'mul' row needs one entry per element", "mul");
        }
        std::vector<std::size_t> out;
        for (const json& v : row) out.push_back(index(v, "mul"));
        table.push_back(std::move(out));
      }
      const std::size_t identity = index(r.field(j, "identity", "group table"), "identity");
      std::vector<std::size_t> inv;
      if (auto it = j.find("inv"); it != j.end()) {
        if (!it->is_array() || it->size() != labels.size()) {
          r.fail("group table: 'inv' must list one inverse per element", "inv");
        }
        for (const json& v : *it) inv.push_back(index(v, "inv"));
      }
      return GroupSpace::table(std::move(labels), std::move(table), identity, std::move(inv));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    r.fail(std::string("group ") + type + ": " + e.what(), "type");
  }
  r.fail("group: unknown type '" + type + "' (expected Zn, Zwindow, S, product, table)", "type");
}

double parse_double(std::string_view tok, bool& ok) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  ok = ec == std::errc{} && ptr == tok.data() + tok.size() && std::isfinite(v);
  return v;
}

}  // namespace

SpacePtr parse_group_spec(std::string_view text) {
  const SpecReader r(text);
  return group_from(r, r.parse());
}

ComplementaryPair parse_pair_spec(std::string_view text) {
  const SpecReader r(text);
  const json j = r.parse();
  r.object(j, "nfunction");
  const std::string kind = r.string_field(j, "kind", "nfunction");
  bool numeric = false;
  if (auto it = j.find("complement"); it != j.end()) {
    if (!it->is_string() || (*it != "auto" && *it != "numeric")) {
      r.fail("nfunction: 'complement' must be \"auto\" or \"numeric\"", "complement");
    }
    numeric = *it == "numeric";
  }
  auto finish = [&](NFunction phi) {
    return numeric ? ComplementaryPair::numeric(std::move(phi))
                   : ComplementaryPair::make(std::move(phi));
  };
  try {
    if (kind == "power") {
      r.only_keys(j, {"kind", "p", "complement"}, "nfunction power");
      const double p = r.number_field(j, "p", "nfunction power");
      if (!(p > 1.0)) r.fail("nfunction power: p must be > 1", "p");
      return finish(NFunction::power(p));
    }
    if (kind == "entropy" || kind == "cosh") {
      r.only_keys(j, {"kind", "complement"}, "nfunction " + kind);
      return finish(kind == "entropy" ? NFunction::entropy() : NFunction::cosh());
    }
    if (kind == "custom") {
      r.only_keys(j, {"kind", "table", "complement"}, "nfunction custom");
      const json& t = r.field(j, "table", "nfunction custom");
      if (!t.is_array()) r.fail("nfunction custom: 'table' must be an array", "table");
      std::vector<TablePoint> rows;
      for (const json& row : t) {
        if (!row.is_array() || row.size() != 3 ||
            !std::all_of(row.begin(), row.end(), [](const json& v) { return v.is_number(); })) {
          r.fail("nfunction custom: rows must be [x, Phi(x), phi(x)]", "table");
        }
        rows.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
      }
      return ComplementaryPair::numeric(NFunction::tabulated(std::move(rows)));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    r.fail("nfunction " + kind + ": " + e.what(), "kind");
  }
  r.fail("nfunction: unknown kind '" + kind + "' (expected power, entropy, cosh, custom)", "kind");
}

GroupFunction parse_function_data(const SpacePtr& space, std::string_view text) {
  GroupFunction f(space);
  std::vector<char> seen(space->size(), 0);
  int line = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of("\n;", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(start, end - start);
    if (auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);

    std::vector<std::pair<std::string_view, int>> toks;  // token, 1-based column
    for (std::size_t i = 0; i < row.size();) {
      if (std::isspace(static_cast<unsigned char>(row[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < row.size() && !std::isspace(static_cast<unsigned char>(row[j]))) ++j;
      toks.emplace_back(row.substr(i, j - i), static_cast<int>(i) + 1);
      i = j;
    }
    if (!toks.empty()) {
      if (toks.size() < 2 || toks.size() > 3) {
        throw ParseError("function data: expected 'element re [im]'", line, toks.front().second);
      }
      const auto idx = space->find(toks[0].first);
      if (!idx) {
        throw ParseError("function data: unknown element '" + std::string(toks[0].first) + "'",
                         line, toks[0].second);
      }
      if (seen[*idx]) {
        throw ParseError("function data: element '" + std::string(toks[0].first) +
                             "' listed twice",
                         line, toks[0].second);
      }
      seen[*idx] = 1;
      double parts[2] = {0.0, 0.0};
      for (std::size_t k = 1; k < toks.size(); ++k) {
        bool ok = false;
        parts[k - 1] = parse_double(toks[k].first, ok);
        if (!ok) {
          throw ParseError("function data: '" + std::string(toks[k].first) +
                               "' is not a finite number",
                           line, toks[k].second);
        }
      }
      f[*idx] = Complex(parts[0], parts[1]);
    }
    if (end < text.size() && text[end] == '\n') ++line;
    start = end + 1;
  }
  return f;
}

ElementSet parse_set(const GroupSpace& space, std::string_view text) {
  ElementSet out;
  std::size_t i = 0;
  const bool integral = space.kind() == GroupKind::window || space.kind() == GroupKind::cyclic;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    int depth = 0;  // product labels such as (0,1) contain commas
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
           (depth > 0 || text[j] != ',')) {
      depth += text[j] == '(' ? 1 : (text[j] == ')' ? -1 : 0);
      ++j;
    }
    const std::string_view tok = text.substr(i, j - i);
    const Position pos = position_at(text, i);
    if (auto dots = tok.find(".."); integral && dots != std::string_view::npos) {
      std::int64_t lo = 0, hi = 0;
      const auto a = tok.substr(0, dots), b = tok.substr(dots + 2);
      const auto ra = std::from_chars(a.data(), a.data() + a.size(), lo);
      const auto rb = std::from_chars(b.data(), b.data() + b.size(), hi);
      if (ra.ec != std::errc{} || rb.ec != std::errc{} || ra.ptr != a.data() + a.size() ||
          rb.ptr != b.data() + b.size() || lo > hi) {
        throw ParseError("set: malformed range '" + std::string(tok) + "'", pos.line, pos.column);
      }
      for (std::int64_t x = lo; x <= hi; ++x) {
        const auto idx = space.find(std::to_string(x));
        if (!idx) {
          throw ParseError("set: element " + std::to_string(x) + " is not in " + space.describe(),
                           pos.line, pos.column);
        }
        out.push_back(*idx);
      }
    } else {
      const auto idx = space.find(tok);
      if (!idx) {
        throw ParseError("set: unknown element '" + std::string(tok) + "'", pos.line, pos.column);
      }
      out.push_back(*idx);
    }
    i = j;
  }
  return normalize_set(std::move(out));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string inline_or_file(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  return read_file(arg);
}

}  // namespace aphi
