// Copyright 2026 The icc Authors.
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

// Micro benchmarks on planted-partition graphs.
//
//   icc_benchmarks --benchmark_filter=Query

#include <cstddef>
#include <vector>

#include "benchmark/benchmark.h"
#include "icc/agreement.h"
#include "icc/clustering.h"
#include "icc/generators.h"
#include "icc/nao_index.h"
#include "icc/signed_graph.h"

namespace icc {
namespace {

// n vertices in n / 100 blocks; about 45 neighbours per vertex.
SignedGraph Planted(std::size_t n) {
  Rng rng(1234);
  return PlantedPartitionGraph(n, n / 100, 0.3, 15.0 / static_cast<double>(n), rng);
}

void BM_BuildIndex(benchmark::State& state) {
  const SignedGraph g = Planted(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(NaoIndex::Build(g));
  state.counters["edges"] = static_cast<double>(g.num_edges());
}
BENCHMARK(BM_BuildIndex)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_CcBaseline(benchmark::State& state) {
  const SignedGraph g = Planted(static_cast<std::size_t>(state.range(0)));
  const double eps = static_cast<double>(state.range(1)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(CcBaseline(g, eps));
}
BENCHMARK(BM_CcBaseline)
    ->Args({1000, 50})
    ->Args({5000, 50})
    ->Args({5000, 100})
    ->Unit(benchmark::kMillisecond);

void BM_IccQuery(benchmark::State& state) {
  const SignedGraph g = Planted(static_cast<std::size_t>(state.range(0)));
  const NaoIndex index = NaoIndex::Build(g);
  const double eps = static_cast<double>(state.range(1)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(IccQuery(index, g, eps));
}
BENCHMARK(BM_IccQuery)
    ->Args({1000, 50})
    ->Args({5000, 50})
    ->Args({5000, 100})
    ->Unit(benchmark::kMillisecond);

void BM_Schedule(benchmark::State& state) {
  const SignedGraph g = Planted(5000);
  const NaoIndex index = NaoIndex::Build(g);
  const EpsilonSchedule schedule = MakeSchedule(g, 21).value();
  const bool indexed = state.range(0) == 1;
  for (auto _ : state) {
    for (double eps : schedule) {
      if (indexed) {
        benchmark::DoNotOptimize(IccQuery(index, g, eps));
      } else {
        benchmark::DoNotOptimize(CcBaseline(g, eps));
      }
    }
  }
  state.SetLabel(indexed ? "icc" : "cc");
}
BENCHMARK(BM_Schedule)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FlipEdge(benchmark::State& state) {
  SignedGraph g = Planted(static_cast<std::size_t>(state.range(0)));
  NaoIndex index = NaoIndex::Build(g);
  Rng rng(5);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.num_vertices() - 1));
  for (auto _ : state) {
    const VertexId u = pick(rng);
    VertexId v = pick(rng);
    if (u == v) v = (v + 1) % static_cast<VertexId>(g.num_vertices());
    benchmark::DoNotOptimize(index.FlipEdge(g, u, v));
  }
}
BENCHMARK(BM_FlipEdge)->Arg(1000)->Arg(5000);

}  // namespace
}  // namespace icc

BENCHMARK_MAIN();
