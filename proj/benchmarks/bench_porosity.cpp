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

#include "aphi/porosity.hpp"

namespace {

using namespace aphi;

void BM_PorosityWitness(benchmark::State& state) {
  const PorosityInstance inst =
      standard_instance(GroupSpace::window(static_cast<std::int64_t>(state.range(0))));
  const ComplementaryPair pair = ComplementaryPair::make(NFunction::power(2.0));
  for (auto _ : state) benchmark::DoNotOptimize(build_witness(inst, pair, 100, 1));
}
BENCHMARK(BM_PorosityWitness)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
