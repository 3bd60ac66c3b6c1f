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

// Model sets: the query graph's edges as an ordered, chained sequence of
// node pairs beginning at a starter node.
//
// Single edges, directed paths and directed cycles are ordered exactly as a
// walk from the starter. Any other weakly connected query (kGeneral) is
// ordered by the same traversal rule; that support is an extension.

#ifndef SUBGRAD_MODEL_SET_H_
#define SUBGRAD_MODEL_SET_H_

#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "subgrad/graph.h"

namespace subgrad {

enum class QueryShape { kSingleEdge, kPath, kCycle, kGeneral };

std::string_view QueryShapeName(QueryShape shape);

struct ModelSet {
  NodeId starter;
  std::vector<Edge> edges;
  QueryShape shape;
  // Non-starter nodes that are the target of one listed edge and the
  // source of a later one.
  std::set<NodeId> middle_elements;

  friend bool operator==(const ModelSet&, const ModelSet&) = default;
};

// Pure function of the degree sequence plus connectivity. Requires a valid
// query (throws Error(kInvalidQuery) otherwise).
QueryShape ClassifyShape(const DirectedGraph& query);

// Without an override: the chain head for paths, the edge source for a
// single edge, otherwise the smallest node with an outgoing edge.
// Throws kUnknownStarter, or kInvalidStarter when the override has no
// outgoing edge or is not the head of a path query.
NodeId SelectStarter(const DirectedGraph& query,
                     const std::optional<NodeId>& override_starter = {});

// Depth-first traversal of the undirected structure from `starter`:
// outgoing edges before incoming ones at each node, neighbours in NodeId
// order, every edge emitted once in its original direction.
ModelSet BuildModelSet(const DirectedGraph& query, const NodeId& starter);

// SelectStarter followed by BuildModelSet.
ModelSet BuildModelSet(const DirectedGraph& query,
                       const std::optional<NodeId>& override_starter = {});

}  // namespace subgrad

#endif  // SUBGRAD_MODEL_SET_H_
