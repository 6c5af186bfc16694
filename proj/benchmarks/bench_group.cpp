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

#include "aphi/aphi_core.hpp"
#include "aphi/harmonic.hpp"
#include "aphi/random.hpp"

namespace {

using namespace aphi;

GroupFunction sample(const SpacePtr& g, std::uint64_t seed) {
  Rng rng(seed);
  GroupFunction f(g);
  for (std::size_t x = 0; x < g->size(); ++x) f[x] = rng.uniform(-1.0, 1.0);
  return f;
}

void BM_ConvolveCyclic(benchmark::State& state) {
  const SpacePtr g = GroupSpace::cyclic(static_cast<std::size_t>(state.range(0)));
  const GroupFunction f = sample(g, 1), h = sample(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(f, h));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvolveCyclic)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNSquared);

void BM_ConvolveS4(benchmark::State& state) {
  const SpacePtr g = GroupSpace::symmetric(4);
  const GroupFunction f = sample(g, 1), h = sample(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(f, h));
}
BENCHMARK(BM_ConvolveS4);

void BM_AphiUpper(benchmark::State& state) {
  const SpacePtr g = GroupSpace::cyclic(8);
  const GroupFunction u = sample(g, 3);
  const ComplementaryPair pair = ComplementaryPair::make(NFunction::power(3.0));
  AphiOptions opts;
  opts.budget = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(aphi_upper(u, pair, opts));
}
BENCHMARK(BM_AphiUpper)->Arg(0)->Arg(8)->Arg(32);

void BM_LemmaWindow(benchmark::State& state) {
  const SpacePtr w = GroupSpace::window(256);
  const ComplementaryPair pair = ComplementaryPair::make(NFunction::power(2.0));
  const ElementSet e = w->interval(-1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(lemma_r_construct(w, e, pair, 0.1));
}
BENCHMARK(BM_LemmaWindow);

void BM_CharactersBrute(benchmark::State& state) {
  const SpacePtr g = GroupSpace::cyclic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiplicative_functional_search(g));
}
BENCHMARK(BM_CharactersBrute)->Arg(4)->Arg(6)->Arg(12);

}  // namespace
