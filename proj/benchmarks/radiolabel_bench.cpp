// Copyright 2026 The radiolabel Authors
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

#include <memory>

#include "radiolabel/graph.hpp"
#include "radiolabel/knt.hpp"
#include "radiolabel/labeling.hpp"
#include "radiolabel/search.hpp"

namespace {

using namespace radiolabel;

void BM_KntOrdering(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(knt::ordering_by_matrices(n, t));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ProductShape::power(n, t).size()));
}
BENCHMARK(BM_KntOrdering)->Args({4, 4})->Args({5, 5})->Args({6, 6});

void BM_KntRecursion(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(knt::ordering_by_recursion(n, t));
}
BENCHMARK(BM_KntRecursion)->Args({4, 4})->Args({5, 5})->Args({6, 6});

void BM_InducedLabelingProductMetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph base = complete_graph(n);
  const auto metric = ProductMetric::power(std::make_shared<const DistanceMatrix>(base.distances()), n);
  const Ordering order = knt::flatten(n, knt::ordering_by_matrices(n, n));
  for (auto _ : state) benchmark::DoNotOptimize(induced_labeling(metric, order));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(order.size()));
}
BENCHMARK(BM_InducedLabelingProductMetric)->DenseRange(3, 6);

void BM_CheckRadio(benchmark::State& state) {
  const Graph g = cartesian_power(complete_graph(5), static_cast<std::size_t>(state.range(0)));
  const Labeling f = induced_labeling(g, knt::flatten(5, knt::ordering_by_matrices(5, state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_radio(g, f));
}
BENCHMARK(BM_CheckRadio)->DenseRange(2, 4);

void BM_ExactRadioNumber(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
  ExactSearchOptions options;
  options.prune = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(exact_radio_number(g, options));
}
BENCHMARK(BM_ExactRadioNumber)->Args({7, 1})->Args({7, 0})->Args({9, 1})->Unit(benchmark::kMillisecond);

void BM_FindConsecutivePetersenSquare(benchmark::State& state) {
  const Graph g = cartesian_power(petersen_graph(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(find_consecutive_ordering(g));
}
BENCHMARK(BM_FindConsecutivePetersenSquare)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
