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

#include "subgrad/model_set.h"

#include <algorithm>
#include <functional>

#include "subgrad/error.h"

namespace subgrad {
namespace {

std::vector<NodeIndex> SortedByLabel(const DirectedGraph& graph,
                                     std::span<const NodeIndex> indices) {
  std::vector<NodeIndex> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end(), [&](NodeIndex a, NodeIndex b) {
    return graph.node(a) < graph.node(b);
  });
  return sorted;
}

std::optional<NodeIndex> PathHead(const DirectedGraph& query) {
  for (NodeIndex u = 0; u < query.node_count(); ++u) {
    if (query.InDegree(u) == 0) return u;
  }
  return std::nullopt;
}

}  // namespace

std::string_view QueryShapeName(QueryShape shape) {
  switch (shape) {
    case QueryShape::kSingleEdge:
      return "single-edge";
    case QueryShape::kPath:
      return "path";
    case QueryShape::kCycle:
      return "cycle";
    case QueryShape::kGeneral:
      return "general";
  }
  return "unknown";
}

QueryShape ClassifyShape(const DirectedGraph& query) {
  RequireValidQuery(query);
  const std::size_t n = query.node_count();
  const std::size_t m = query.edge_count();
  if (n == 2 && m == 1) return QueryShape::kSingleEdge;

  std::size_t sources = 0;
  std::size_t sinks = 0;
  std::size_t inner = 0;
  for (NodeIndex u = 0; u < n; ++u) {
    const auto in = query.InDegree(u);
    const auto out = query.OutDegree(u);
    if (in == 0 && out == 1) {
      ++sources;
    } else if (in == 1 && out == 0) {
      ++sinks;
    } else if (in == 1 && out == 1) {
      ++inner;
    }
  }
  // Weak connectivity is guaranteed by validation, so these degree
  // patterns pin down a single chain or a single cycle.
  if (m == n && inner == n) return QueryShape::kCycle;
  if (m + 1 == n && sources == 1 && sinks == 1 && inner + 2 == n) {
    return QueryShape::kPath;
  }
  return QueryShape::kGeneral;
}

NodeId SelectStarter(const DirectedGraph& query,
                     const std::optional<NodeId>& override_starter) {
  const QueryShape shape = ClassifyShape(query);
  if (override_starter) {
    auto index = query.IndexOf(*override_starter);
    if (!index) {
      throw Error(ErrorCode::kUnknownStarter,
                  "starter '" + override_starter->label() +
                      "' is not a query node");
    }
    if (query.OutDegree(*index) == 0) {
      throw Error(ErrorCode::kInvalidStarter,
                  "starter '" + override_starter->label() +
                      "' has no outgoing edge");
    }
    if (shape == QueryShape::kPath && query.InDegree(*index) != 0) {
      throw Error(ErrorCode::kInvalidStarter,
                  "starter '" + override_starter->label() +
                      "' is not the head of the path");
    }
    return *override_starter;
  }

  switch (shape) {
    case QueryShape::kPath:
    case QueryShape::kSingleEdge:
      return query.node(*PathHead(query));
    case QueryShape::kCycle:
    case QueryShape::kGeneral:
      break;
  }
  std::optional<NodeId> best;
  for (NodeIndex u = 0; u < query.node_count(); ++u) {
    if (query.OutDegree(u) > 0 && (!best || query.node(u) < *best)) {
      best = query.node(u);
    }
  }
  return *best;
}

ModelSet BuildModelSet(const DirectedGraph& query, const NodeId& starter) {
  const QueryShape shape = ClassifyShape(query);
  const auto start = query.IndexOf(starter);
  if (!start) {
    throw Error(ErrorCode::kUnknownStarter,
                "starter '" + starter.label() + "' is not a query node");
  }

  const std::size_t n = query.node_count();
  std::vector<bool> visited(n, false);
  std::vector<std::vector<NodeIndex>> out_sorted(n), in_sorted(n);
  for (NodeIndex u = 0; u < n; ++u) {
    out_sorted[u] = SortedByLabel(query, query.successors(u));
    in_sorted[u] = SortedByLabel(query, query.predecessors(u));
  }
  // Edges are identified by (source, target); the query is simple.
  std::set<std::pair<NodeIndex, NodeIndex>> emitted;
  std::vector<Edge> edges;
  edges.reserve(query.edge_count());

  std::function<void(NodeIndex)> visit = [&](NodeIndex u) {
    visited[u] = true;
    for (NodeIndex v : out_sorted[u]) {
      if (!emitted.emplace(u, v).second) continue;
      edges.push_back({query.node(u), query.node(v)});
      if (!visited[v]) visit(v);
    }
    for (NodeIndex w : in_sorted[u]) {
      if (!emitted.emplace(w, u).second) continue;
      edges.push_back({query.node(w), query.node(u)});
      if (!visited[w]) visit(w);
    }
  };
  visit(*start);

  std::set<NodeId> middle;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const NodeId& node = edges[i].target;
    if (node == starter) continue;
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[j].source == node) {
        middle.insert(node);
        break;
      }
    }
  }
  return ModelSet{starter, std::move(edges), shape, std::move(middle)};
}

ModelSet BuildModelSet(const DirectedGraph& query,
                       const std::optional<NodeId>& override_starter) {
  return BuildModelSet(query, SelectStarter(query, override_starter));
}

}  // namespace subgrad
