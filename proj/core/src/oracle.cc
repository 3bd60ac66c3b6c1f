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

#include "subgrad/oracle.h"

#include <algorithm>
#include <iterator>
#include <random>
#include <string>

#include "subgrad/error.h"
#include "subgrad/matcher.h"

namespace subgrad {
namespace {

// std::uniform_*_distribution output is implementation-defined; these
// helpers only depend on the engine, which is fully specified.
double UnitInterval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool Bernoulli(std::mt19937_64& rng, double p) {
  return UnitInterval(rng) < p;
}

std::size_t Below(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(UnitInterval(rng) * static_cast<double>(bound));
}

template <typename T>
void Shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[Below(rng, i)]);
  }
}

class Enumerator {
 public:
  Enumerator(const DirectedGraph& query, const DirectedGraph& source)
      : query_(query),
        source_(source),
        query_matrix_(ToAdjacencyMatrix(query).cells),
        source_matrix_(ToAdjacencyMatrix(source).cells),
        image_(query.node_count()),
        taken_(source.node_count(), false) {}

  std::set<OracleMapping> Run() {
    Assign(0);
    return std::move(found_);
  }

 private:
  // Query nodes are placed in index order; node `next` is checked against
  // every already-placed node in both directions.
  void Assign(std::size_t next) {
    if (next == image_.size()) {
      OracleMapping mapping;
      for (std::size_t q = 0; q < image_.size(); ++q) {
        mapping.emplace(query_.node(static_cast<NodeIndex>(q)),
                        source_.node(static_cast<NodeIndex>(image_[q])));
      }
      found_.insert(std::move(mapping));
      return;
    }
    for (std::size_t s = 0; s < source_matrix_.size(); ++s) {
      if (taken_[s]) continue;
      bool consistent = true;
      for (std::size_t p = 0; p < next && consistent; ++p) {
        if (query_matrix_[p][next] == 1 && source_matrix_[image_[p]][s] != 1) {
          consistent = false;
        }
        if (query_matrix_[next][p] == 1 && source_matrix_[s][image_[p]] != 1) {
          consistent = false;
        }
      }
      if (!consistent) continue;
      image_[next] = s;
      taken_[s] = true;
      Assign(next + 1);
      taken_[s] = false;
    }
  }

  const DirectedGraph& query_;
  const DirectedGraph& source_;
  std::vector<std::vector<int>> query_matrix_;
  std::vector<std::vector<int>> source_matrix_;
  std::vector<std::size_t> image_;
  std::vector<bool> taken_;
  std::set<OracleMapping> found_;
};

}  // namespace

std::set<OracleMapping> EnumerateSubgraphIsomorphisms(
    const DirectedGraph& query, const DirectedGraph& source,
    std::size_t size_limit) {
  RequireValidQuery(query);
  if (source.node_count() > size_limit) {
    throw Error(ErrorCode::kSizeLimit,
                "source has " + std::to_string(source.node_count()) +
                    " nodes; the oracle accepts at most " +
                    std::to_string(size_limit));
  }
  return Enumerator(query, source).Run();
}

DirectedGraph RandomDigraph(const RandomGraphSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  DirectedGraph graph;
  for (std::size_t i = 0; i < spec.node_count; ++i) {
    graph.AddNode(NodeId(std::to_string(i)));
  }
  for (NodeIndex i = 0; i < spec.node_count; ++i) {
    for (NodeIndex j = 0; j < spec.node_count; ++j) {
      if (i == j) continue;
      if (Bernoulli(rng, spec.edge_probability)) graph.AddEdge(i, j);
    }
  }
  return graph;
}

DirectedGraph RandomSparseDigraph(std::size_t node_count, std::size_t edge_count,
                                  std::uint64_t seed) {
  if (node_count == 0 || edge_count > node_count * (node_count - 1)) {
    throw Error(ErrorCode::kInvalidQuery,
                std::to_string(edge_count) + " edges do not fit on " +
                    std::to_string(node_count) + " nodes");
  }
  std::mt19937_64 rng(seed);
  DirectedGraph graph;
  for (std::size_t i = 0; i < node_count; ++i) {
    graph.AddNode(NodeId(std::to_string(i)));
  }
  std::size_t added = 0;
  while (added < edge_count) {
    const auto u = static_cast<NodeIndex>(Below(rng, node_count));
    const auto v = static_cast<NodeIndex>(Below(rng, node_count));
    if (u == v || graph.HasEdge(u, v)) continue;
    graph.AddEdge(u, v);
    ++added;
  }
  return graph;
}

DirectedGraph RandomQuery(QueryShape shape, std::size_t node_count,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (shape == QueryShape::kSingleEdge) node_count = 2;
  if (node_count < 2 || node_count > 26) {
    throw Error(ErrorCode::kInvalidQuery,
                "random queries need between 2 and 26 nodes");
  }
  std::vector<NodeId> labels;
  for (std::size_t i = 0; i < node_count; ++i) {
    labels.emplace_back(std::string(1, static_cast<char>('a' + i)));
  }
  Shuffle(labels, rng);

  DirectedGraph graph;
  for (const NodeId& id : labels) graph.AddNode(id);
  const auto n = static_cast<NodeIndex>(node_count);
  switch (shape) {
    case QueryShape::kSingleEdge:
    case QueryShape::kPath:
      for (NodeIndex i = 0; i + 1 < n; ++i) graph.AddEdge(i, i + 1);
      break;
    case QueryShape::kCycle:
      for (NodeIndex i = 0; i < n; ++i) graph.AddEdge(i, (i + 1) % n);
      break;
    case QueryShape::kGeneral:
      for (NodeIndex i = 1; i < n; ++i) {
        const auto j = static_cast<NodeIndex>(Below(rng, i));
        if (Bernoulli(rng, 0.5)) {
          graph.AddEdge(i, j);
        } else {
          graph.AddEdge(j, i);
        }
      }
      for (NodeIndex i = 0; i < n; ++i) {
        for (NodeIndex j = 0; j < n; ++j) {
          if (i != j && !graph.HasEdge(i, j) && Bernoulli(rng, 0.3)) {
            graph.AddEdge(i, j);
          }
        }
      }
      break;
  }
  return graph;
}

OracleInstance RandomOracleInstance(std::uint64_t seed) {
  static constexpr QueryShape kShapes[] = {QueryShape::kPath, QueryShape::kCycle,
                                           QueryShape::kGeneral};
  static constexpr double kProbabilities[] = {0.1, 0.2, 0.3, 0.5};
  std::mt19937_64 rng(seed);
  const QueryShape shape = kShapes[Below(rng, 3)];
  const std::size_t query_nodes = 2 + Below(rng, 3);
  const std::size_t source_nodes = 4 + Below(rng, 5);
  const double p = kProbabilities[Below(rng, 4)];
  const std::uint64_t query_seed = rng();
  const std::uint64_t source_seed = rng();
  return {RandomQuery(shape, query_nodes, query_seed),
          RandomDigraph({source_nodes, p, source_seed})};
}

OracleComparison CompareMatcherOracle(const DirectedGraph& query,
                                      const DirectedGraph& source,
                                      std::size_t size_limit) {
  OracleComparison report;
  report.oracle = EnumerateSubgraphIsomorphisms(query, source, size_limit);

  const ReferenceTable table =
      EnumerateMatches(source, BuildModelSet(query), MatchMode::kInjective);
  report.matcher_match_count = table.match_count();
  for (std::size_t i = 0; i < table.match_count(); ++i) {
    report.matcher.insert(table.match(i).mapping);
  }

  std::set_difference(report.matcher.begin(), report.matcher.end(),
                      report.oracle.begin(), report.oracle.end(),
                      std::inserter(report.only_matcher,
                                    report.only_matcher.end()));
  std::set_difference(report.oracle.begin(), report.oracle.end(),
                      report.matcher.begin(), report.matcher.end(),
                      std::inserter(report.only_oracle,
                                    report.only_oracle.end()));
  return report;
}

}  // namespace subgrad
