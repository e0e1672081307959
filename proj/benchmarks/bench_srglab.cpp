// Copyright 2026 The srglab Authors
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

#include "srglab/asymptotics.hpp"
#include "srglab/counting.hpp"
#include "srglab/families.hpp"
#include "srglab/instances.hpp"
#include "srglab/regularity.hpp"
#include "srglab/srg.hpp"

using namespace srglab;

static void BM_paley_generate(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(paley(q));
}
BENCHMARK(BM_paley_generate)->Arg(101)->Arg(401)->Arg(1997);

static void BM_verify_srg(benchmark::State& state) {
  const Graph g = paley(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_srg(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_verify_srg)->Arg(101)->Arg(401)->Arg(1997)->Complexity(benchmark::oNCubed);

static void BM_codegree_deviation(benchmark::State& state) {
  const Graph g = triangular(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(codegree_deviation(g));
}
BENCHMARK(BM_codegree_deviation)->Arg(20)->Arg(40)->Arg(60);

static void BM_codegree_histogram(benchmark::State& state) {
  const auto inst = random_bipartite(static_cast<std::size_t>(state.range(0)), 120, 0.5, 1);
  const auto r = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(codegree_histogram(inst.graph, inst.A, inst.B, r));
}
BENCHMARK(BM_codegree_histogram)->Args({60, 2})->Args({120, 2})->Args({40, 3});

// Uniformity falsification on a random pair, where the search rarely
// terminates early.
static void BM_falsify_uniformity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = random_bipartite(n, n, 0.5, 3);
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(falsify_uniformity(inst.graph, inst.A, inst.B, Rational(1, 4), 16, seed++));
}
BENCHMARK(BM_falsify_uniformity)->Arg(100)->Arg(400);

static void BM_build_partition(benchmark::State& state) {
  const Graph g = disjoint_cliques(4, 50);
  BuildOptions opt;
  opt.classes = 4;
  opt.epsilon = Rational(1, 10);
  for (auto _ : state) benchmark::DoNotOptimize(build_partition(g, opt));
}
BENCHMARK(BM_build_partition)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
