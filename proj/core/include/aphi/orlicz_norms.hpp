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

#include <cstddef>
#include <optional>
#include <string>

#include "aphi/group_function.hpp"
#include "aphi/nfunction.hpp"

namespace aphi {

enum class NormMethod { bisection, amemiya_min, oracle_max, closed_form };

const char* to_string(NormMethod m);

struct NormReport {
  double value = 0.0;
  NormMethod method = NormMethod::bisection;
  double residual = 0.0;
  std::size_t iterations = 0;
  /// Independent value, when one was computed.
  std::optional<double> cross_check;
  /// Cross-check disagreed or did not converge. The value is still reported.
  bool flagged = false;
  std::string note;
};

/// rho_Phi(f) = sum_x Phi(|f(x)|) lambda({x}). Throws CapError naming the
/// offending element when some |f(x)| exceeds the domain cap.
double modular(const NFunction& phi, const GroupFunction& f);

/// N_Phi(f) = inf{k > 0 : rho_Phi(f/k) <= 1}. The returned k satisfies
/// rho_Phi(f/k) <= 1 and is the smallest such double the bisection reaches.
NormReport luxemburg(const NFunction& phi, const GroupFunction& f);

/// N_Phi(chi_F) = 1 / Phi^{-1}(1/lambda(F)).
double char_fn_norm(const NFunction& phi, const GroupSpace& space,
                    const ElementSet& set, const Tolerances& tol = {});

struct OrliczOptions {
  bool cross_check = true;
  double agreement = 1e-6;  // relative
};

/// ||f||_Phi = inf_{k>0} (1 + rho_Phi(k f)) / k, minimized by golden section.
/// With cross_check set, the Lagrangian oracle runs as well and the report
/// is flagged when the two disagree.
NormReport orlicz_norm(const ComplementaryPair& pair, const GroupFunction& f,
                       const OrliczOptions& options = {});

struct OracleResult {
  NormReport report;
  GroupFunction maximizer;  // g >= 0 with rho_Psi(g) <= 1
};

/// sup{ sum |f g| lambda : rho_Psi(g) <= 1 } through the stationarity
/// condition g(x) = (Psi')^{-1}(|f(x)| / mu), with mu fixed by the constraint.
OracleResult orlicz_oracle(const ComplementaryPair& pair, const GroupFunction& f);

/// sum |f(x) g(x)| lambda({x})
double pairing(const GroupFunction& f, const GroupFunction& g);

}  // namespace aphi
