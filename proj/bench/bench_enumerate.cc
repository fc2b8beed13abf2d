// Copyright 2026 The Stablegraphs Authors
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

// Serial reference against the OpenMP kernels. Arguments are (g, m).

#include <benchmark/benchmark.h>

#include <memory>

#include "stablegraphs/enumerate.h"
#include "stablegraphs/gamma.h"
#include "stablegraphs/perm.h"

namespace {

using stablegraphs::Bounds;
using stablegraphs::Execution;

template <Execution kExecution>
void BM_EnumerateStableGraphs(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  std::size_t total = 0;
  for (auto _ : state) {
    total = stablegraphs::EnumerateStableGraphs(g, m, Bounds{}, kExecution).total();
    benchmark::DoNotOptimize(total);
  }
  state.counters["graphs"] = static_cast<double>(total);
}
BENCHMARK_TEMPLATE(BM_EnumerateStableGraphs, Execution::kSerial)
    ->Args({0, 7})->Args({1, 4})->Args({2, 2})->Args({3, 0})->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_EnumerateStableGraphs, Execution::kParallel)
    ->Args({0, 7})->Args({1, 4})->Args({2, 2})->Args({3, 0})->Unit(benchmark::kMillisecond);

template <Execution kExecution>
void BM_CanonicalEncodings(benchmark::State& state) {
  const auto graphs = stablegraphs::EnumerateStableGraphs(
                          static_cast<int>(state.range(0)),
                          static_cast<int>(state.range(1)))
                          .Flatten();
  for (auto _ : state) {
    benchmark::DoNotOptimize(stablegraphs::CanonicalEncodings(graphs, kExecution));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(graphs.size()));
}
BENCHMARK_TEMPLATE(BM_CanonicalEncodings, Execution::kSerial)
    ->Args({0, 7})->Args({2, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_CanonicalEncodings, Execution::kParallel)
    ->Args({0, 7})->Args({2, 2})->Unit(benchmark::kMillisecond);

template <Execution kExecution>
void BM_OrbitFusion(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const auto group = std::make_shared<const stablegraphs::PermGroup>(
      stablegraphs::PermGroup::Symmetric(m));
  std::size_t classes = 0;
  for (auto _ : state) {
    classes = stablegraphs::EnumerateGammaStrata(g, m, group, Bounds{}, kExecution).total();
    benchmark::DoNotOptimize(classes);
  }
  state.counters["classes"] = static_cast<double>(classes);
}
BENCHMARK_TEMPLATE(BM_OrbitFusion, Execution::kSerial)
    ->Args({0, 6})->Args({1, 4})->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_OrbitFusion, Execution::kParallel)
    ->Args({0, 6})->Args({1, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
