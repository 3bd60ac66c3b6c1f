// Copyright 2026 The subgrad Authors
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

#include <cstdint>

#include "subgrad/graph.h"
#include "subgrad/matcher.h"
#include "subgrad/model_set.h"
#include "subgrad/oracle.h"

namespace subgrad {
namespace {

DirectedGraph ChainQuery(std::size_t edges) {
  DirectedGraph query;
  for (std::size_t i = 0; i < edges; ++i) {
    query.AddEdge(NodeId("q" + std::to_string(i)),
                  NodeId("q" + std::to_string(i + 1)));
  }
  return query;
}

DirectedGraph CycleQuery(std::size_t length) {
  DirectedGraph query;
  for (std::size_t i = 0; i < length; ++i) {
    query.AddEdge(NodeId("q" + std::to_string(i)),
                  NodeId("q" + std::to_string((i + 1) % length)));
  }
  return query;
}

// Source with average out-degree 10.
void BM_EnumeratePath3(benchmark::State& state) {
  const auto nodes = static_cast<std::size_t>(state.range(0));
  const DirectedGraph source = RandomSparseDigraph(nodes, nodes * 10, 7);
  const ModelSet model = BuildModelSet(ChainQuery(3));
  std::size_t matches = 0;
  for (auto _ : state) {
    const ReferenceTable table = EnumerateMatches(source, model);
    matches = table.match_count();
    benchmark::DoNotOptimize(matches);
  }
  state.counters["matches"] = static_cast<double>(matches);
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(matches));
}
BENCHMARK(BM_EnumeratePath3)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_CountPath3(benchmark::State& state) {
  const auto nodes = static_cast<std::size_t>(state.range(0));
  const DirectedGraph source = RandomSparseDigraph(nodes, nodes * 10, 7);
  const ModelSet model = BuildModelSet(ChainQuery(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CountMatches(source, model));
  }
}
BENCHMARK(BM_CountPath3)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_EnumerateCycle(benchmark::State& state) {
  const DirectedGraph source = RandomSparseDigraph(10000, 100000, 11);
  const ModelSet model =
      BuildModelSet(CycleQuery(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateMatches(source, model).match_count());
  }
}
BENCHMARK(BM_EnumerateCycle)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_OracleVersusMatcher(benchmark::State& state) {
  const DirectedGraph source = RandomDigraph({8, 0.3, 42});
  const DirectedGraph query = CycleQuery(4);
  const bool use_oracle = state.range(0) == 1;
  for (auto _ : state) {
    if (use_oracle) {
      benchmark::DoNotOptimize(EnumerateSubgraphIsomorphisms(query, source));
    } else {
      benchmark::DoNotOptimize(
          EnumerateMatches(source, BuildModelSet(query)).match_count());
    }
  }
}
BENCHMARK(BM_OracleVersusMatcher)->Arg(0)->Arg(1);

}  // namespace
}  // namespace subgrad

BENCHMARK_MAIN();
