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

#include <exception>
#include <string>
#include <vector>

#include "aphi/report.hpp"
#include "run_config.hpp"

namespace aphi::cli {

enum ExitCode : int {
  kPass = 0,
  kChecksFailed = 1,
  kInputError = 2,
  kScopeError = 3,
  kContradiction = 4,
};

/// "nfunc conjugate", "norm luxemburg", ..., "suite".
const std::vector<std::string>& verbs();

/// Runs config.verb and returns its report. Library errors propagate.
Report run(const RunConfig& config);

/// Exit status for an error escaping run().
int exit_code_for(const std::exception& e);

}  // namespace aphi::cli
