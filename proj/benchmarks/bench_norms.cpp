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

#include "aphi/orlicz_norms.hpp"
#include "aphi/random.hpp"

namespace {

using namespace aphi;

GroupFunction sample(std::size_t n) {
  Rng rng(1);
  GroupFunction f(GroupSpace::cyclic(n));
  for (std::size_t x = 0; x < n; ++x) f[x] = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  return f;
}

void BM_Luxemburg(benchmark::State& state) {
  const GroupFunction f = sample(static_cast<std::size_t>(state.range(0)));
  const NFunction phi = NFunction::entropy();
  for (auto _ : state) benchmark::DoNotOptimize(luxemburg(phi, f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Luxemburg)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_OrliczMin(benchmark::State& state) {
  const GroupFunction f = sample(static_cast<std::size_t>(state.range(0)));
  const ComplementaryPair pair = ComplementaryPair::make(NFunction::entropy());
  for (auto _ : state) benchmark::DoNotOptimize(orlicz_norm(pair, f, {false}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OrliczMin)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_OrliczOracle(benchmark::State& state) {
  const GroupFunction f = sample(static_cast<std::size_t>(state.range(0)));
  const ComplementaryPair pair = ComplementaryPair::make(NFunction::entropy());
  for (auto _ : state) benchmark::DoNotOptimize(orlicz_oracle(pair, f));
}
BENCHMARK(BM_OrliczOracle)->RangeMultiplier(4)->Range(8, 2048);

}  // namespace
