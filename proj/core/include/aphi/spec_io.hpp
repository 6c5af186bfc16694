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
#include <string_view>

#include "aphi/group_function.hpp"
#include "aphi/nfunction.hpp"

namespace aphi {

/// Group specs are JSON objects:
///   {"type": "Zn", "n": 8}
///   {"type": "Zwindow", "radius": 256}
///   {"type": "S", "n": 3}
///   {"type": "product", "factors": [spec, ...]}
///   {"type": "table", "elements": [...], "mul": [[...], ...], "identity": "e"}
/// Unknown keys are rejected. Errors are ParseError with line and column.
SpacePtr parse_group_spec(std::string_view text);

/// N-function specs: {"kind": "power", "p": 2}, {"kind": "entropy"},
/// {"kind": "cosh"}, {"kind": "custom", "table": [[x, Phi, phi], ...]}.
/// The optional key "complement" is "auto" (default) or "numeric".
ComplementaryPair parse_pair_spec(std::string_view text);

/// Rows "element re [im]", one per line or separated by ';'. '#' starts a
/// comment. Elements not listed are zero.
GroupFunction parse_function_data(const SpacePtr& space, std::string_view text);

/// Element labels separated by whitespace or commas; "a..b" expands to an
/// integer range on Z_n and Z-windows.
ElementSet parse_set(const GroupSpace& space, std::string_view text);

/// Whole file contents; ParseError when unreadable.
std::string read_file(const std::string& path);

/// `arg` itself when it looks like inline JSON, otherwise the named file.
std::string inline_or_file(const std::string& arg);

}  // namespace aphi
