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

// Brute-force reference for the matcher. The enumerator assigns query
// nodes one at a time over a dense adjacency matrix and checks nothing but
// edges and injectivity, so it shares no search logic with the matcher.
// It is exponential on purpose and refuses large sources.

#ifndef SUBGRAD_ORACLE_H_
#define SUBGRAD_ORACLE_H_

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "subgrad/graph.h"
#include "subgrad/model_set.h"

namespace subgrad {

// Query node -> source node, injective and edge-preserving.
using OracleMapping = std::map<NodeId, NodeId>;

inline constexpr std::size_t kDefaultOracleSizeLimit = 12;

// Every non-induced subgraph isomorphism of `query` into `source`.
// Throws Error(kSizeLimit) if the source has more than `size_limit` nodes
// and Error(kInvalidQuery) for an invalid query.
std::set<OracleMapping> EnumerateSubgraphIsomorphisms(
    const DirectedGraph& query, const DirectedGraph& source,
    std::size_t size_limit = kDefaultOracleSizeLimit);

struct RandomGraphSpec {
  std::size_t node_count = 1;
  double edge_probability = 0.0;
  std::uint64_t seed = 0;
};

// Nodes are labelled "0" .. "n-1". Each ordered pair (i, j), i != j, is an
// edge independently with the given probability. The stream is
// std::mt19937_64, so a spec yields the same graph on every platform.
DirectedGraph RandomDigraph(const RandomGraphSpec& spec);

// Exactly `edge_count` distinct edges (no self-loops) drawn uniformly over
// ordered node pairs; for large sparse sources where per-pair sampling is
// too slow. Throws Error(kInvalidQuery) if edge_count exceeds n * (n - 1).
DirectedGraph RandomSparseDigraph(std::size_t node_count, std::size_t edge_count,
                                  std::uint64_t seed);

// Random weakly connected query without self-loops. kPath and kCycle give a
// directed chain or cycle through all nodes; kGeneral gives a random
// spanning tree plus extra edges. Labels are shuffled letters "a", "b", ...
// kSingleEdge ignores node_count. node_count must be at least 2.
DirectedGraph RandomQuery(QueryShape shape, std::size_t node_count,
                          std::uint64_t seed);

// One randomized (query, source) pair for matcher/oracle cross-checks:
// query shape uniform over path, cycle and general with 2-4 nodes; source
// with 4-8 nodes and edge probability drawn from {0.1, 0.2, 0.3, 0.5}.
struct OracleInstance {
  DirectedGraph query;
  DirectedGraph source;
};
OracleInstance RandomOracleInstance(std::uint64_t seed);

struct OracleComparison {
  std::set<OracleMapping> matcher;
  std::set<OracleMapping> oracle;
  std::set<OracleMapping> only_matcher;
  std::set<OracleMapping> only_oracle;
  // Matches emitted by the matcher; exceeds matcher.size() if any mapping
  // was produced twice.
  std::size_t matcher_match_count = 0;

  bool passed() const {
    return only_matcher.empty() && only_oracle.empty() &&
           matcher_match_count == matcher.size();
  }
};

// Runs the matcher in injective mode and the oracle on the same pair and
// diffs the mapping sets. Throws Error(kSizeLimit) like the oracle.
OracleComparison CompareMatcherOracle(
    const DirectedGraph& query, const DirectedGraph& source,
    std::size_t size_limit = kDefaultOracleSizeLimit);

}  // namespace subgrad

#endif  // SUBGRAD_ORACLE_H_
