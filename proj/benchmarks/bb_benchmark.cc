// Copyright 2026 The setmax Authors.
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

#include <vector>

#include "setmax/bb.h"
#include "setmax/constrained.h"
#include "setmax/decompose.h"
#include "setmax/generators.h"
#include "setmax/graph.h"
#include "setmax/ground.h"
#include "setmax/submax.h"

namespace setmax {
namespace {

Decomposition MakeDecomposition(int n, uint64_t seed) {
  Rng rng(seed);
  const SetFunction theta = RandomTable(n, rng);
  DecomposeOptions options;
  options.validate = false;
  return Decompose(theta,
                   RoundUpToPowerOfTwo(MinAlpha(theta, GroundSet(n))),
                   Graph::Complete(n), options);
}

void BM_BBMaximize(benchmark::State& state, FuMode fu, Engine engine) {
  const int n = static_cast<int>(state.range(0));
  const Decomposition dec = MakeDecomposition(n, 7);
  BBConfig cfg;
  cfg.fu_mode = fu;
  cfg.engine = engine;
  int64_t visited = 0;
  for (auto _ : state) {
    const BBResult r = BBMaximize(dec, cfg);
    visited = r.stats.nodes_visited;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["nodes"] = static_cast<double>(visited);
}
BENCHMARK_CAPTURE(BM_BBMaximize, modular_closed_form, FuMode::kModular,
                  Engine::kClosedForm)
    ->DenseRange(6, 12, 2);
BENCHMARK_CAPTURE(BM_BBMaximize, modular_interval, FuMode::kModular,
                  Engine::kInterval)
    ->DenseRange(6, 12, 2);
BENCHMARK_CAPTURE(BM_BBMaximize, tight_interval, FuMode::kTight,
                  Engine::kInterval)
    ->DenseRange(6, 12, 2);

void BM_IntervalMax(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(11);
  const SetFunction g = RandomSignedSubmodular(n, rng);
  const Interval iv{Subset::Empty(n), Subset::Full(n)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(IntervalMax(g, iv).value);
  }
}
BENCHMARK(BM_IntervalMax)->DenseRange(8, 16, 4);

void BM_LsMax(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(13);
  const SetFunction g = RandomSubmodular(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(LsMax(g, Subset::Full(n), 0.5).value);
  }
}
BENCHMARK(BM_LsMax)->DenseRange(8, 16, 4);

void BM_BBCMaximize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Decomposition dec = MakeDecomposition(n, 19);
  const SubsetSystem sys = SubsetSystem::Cardinality(n, n / 2);
  BBConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(BBCMaximize(dec, sys, cfg).value);
  }
}
BENCHMARK(BM_BBCMaximize)->DenseRange(6, 10, 2);

}  // namespace
}  // namespace setmax

BENCHMARK_MAIN();
