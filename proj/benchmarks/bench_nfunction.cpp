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

#include <benchmark/benchmark.h>

#include "aphi/nfunction.hpp"

namespace {

using namespace aphi;

void BM_ConjugatePower(benchmark::State& state) {
  const NFunction phi = NFunction::power(3.0);
  double y = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(conjugate_at(phi, y));
    y = y < 100.0 ? y * 1.1 : 0.01;
  }
}
BENCHMARK(BM_ConjugatePower);

void BM_ConjugateEntropy(benchmark::State& state) {
  const NFunction phi = NFunction::entropy();
  double y = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(conjugate_at(phi, y));
    y = y < 100.0 ? y * 1.1 : 0.01;
  }
}
BENCHMARK(BM_ConjugateEntropy);

void BM_Inverse(benchmark::State& state) {
  const NFunction phi = NFunction::cosh();
  double t = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inverse(phi, t));
    t = t < 1e3 ? t * 1.3 : 1e-3;
  }
}
BENCHMARK(BM_Inverse);

}  // namespace
