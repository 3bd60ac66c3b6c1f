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

// Directed graph model shared by every other part of the library: string
// node identifiers, a simple digraph with stable node order, conversion to
// and from 0/1 adjacency matrices, and the plain-text edge-list format.
//
// Edge-list format, one item per line:
//
//   # comment to end of line
//   a b          edge a -> b (separated by spaces or tabs)
//   node z       node without edges
//
// Node order is first-appearance order. Repeating an edge, or declaring a
// node with `node` after it has already appeared, is an error.

#ifndef SUBGRAD_GRAPH_H_
#define SUBGRAD_GRAPH_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace subgrad {

// A node label over [A-Za-z0-9_-]. "node" is reserved by the edge-list
// format and rejected. Ordering is byte-lexicographic and is
// the ordering used for every deterministic output ("10" sorts before "2").
class NodeId {
 public:
  // Throws Error(kInvalidNodeId) for an empty label or a label with
  // characters outside the allowed set.
  explicit NodeId(std::string label);

  static bool IsValidLabel(std::string_view label);

  const std::string& label() const { return label_; }

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
  friend bool operator==(const NodeId&, const NodeId&) = default;

 private:
  std::string label_;
};

struct Edge {
  NodeId source;
  NodeId target;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// "(u,v)" for one edge, "(u,v)(v,w)..." for a sequence.
std::string FormatEdge(const Edge& edge);
std::string FormatEdges(std::span<const Edge> edges);

using NodeIndex = std::uint32_t;

// Simple directed graph. Node indices are positions in insertion order;
// successor and predecessor lists are kept sorted by index. Self-loops are
// representable (source graphs may carry them); duplicate edges are not.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  // Throws Error(kDuplicateNodeDeclaration) if `id` is already present.
  NodeIndex AddNode(const NodeId& id);
  // Returns the existing index of `id`, adding it if absent.
  NodeIndex EnsureNode(const NodeId& id);

  // Throws Error(kDuplicateEdge) if the edge exists already.
  void AddEdge(NodeIndex source, NodeIndex target);
  // Adds missing endpoints first.
  void AddEdge(const NodeId& source, const NodeId& target);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return nodes_.empty(); }

  std::span<const NodeId> nodes() const { return nodes_; }
  const NodeId& node(NodeIndex index) const { return nodes_[index]; }
  std::optional<NodeIndex> IndexOf(std::string_view label) const;
  std::optional<NodeIndex> IndexOf(const NodeId& id) const {
    return IndexOf(id.label());
  }
  bool Contains(const NodeId& id) const { return IndexOf(id).has_value(); }

  std::span<const NodeIndex> successors(NodeIndex index) const {
    return successors_[index];
  }
  std::span<const NodeIndex> predecessors(NodeIndex index) const {
    return predecessors_[index];
  }
  std::size_t OutDegree(NodeIndex index) const {
    return successors_[index].size();
  }
  std::size_t InDegree(NodeIndex index) const {
    return predecessors_[index].size();
  }
  bool HasEdge(NodeIndex source, NodeIndex target) const;
  bool HasEdge(const NodeId& source, const NodeId& target) const;

  // Edges in node-order-major, then target-order, sequence.
  std::vector<Edge> Edges() const;

  // Same node order and same edge set.
  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b);

 private:
  std::vector<NodeId> nodes_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<std::vector<NodeIndex>> successors_;
  std::vector<std::vector<NodeIndex>> predecessors_;
  std::size_t edge_count_ = 0;
};

bool IsWeaklyConnected(const DirectedGraph& graph);

// Square 0/1 matrix over a fixed node ordering; cells[i][j] is 1 iff
// order[i] -> order[j] is an edge.
struct AdjacencyMatrix {
  std::vector<NodeId> order;
  std::vector<std::vector<int>> cells;

  friend bool operator==(const AdjacencyMatrix&,
                         const AdjacencyMatrix&) = default;
};

// Throws Error(kOrderMismatch) unless `order` is a permutation of the
// graph's nodes.
AdjacencyMatrix ToAdjacencyMatrix(const DirectedGraph& graph,
                                  std::span<const NodeId> order);
AdjacencyMatrix ToAdjacencyMatrix(const DirectedGraph& graph);

// Node order of the result follows matrix.order. Throws kNonSquare,
// kNonBinaryCell, or kOrderMismatch (repeated label in the order).
DirectedGraph FromAdjacencyMatrix(const AdjacencyMatrix& matrix);

DirectedGraph ParseEdgeList(std::string_view text);
DirectedGraph ReadEdgeListFile(const std::filesystem::path& path);

// Edge lines in Edges() order. `node` lines are inserted only where needed
// to reproduce the node order on reparse, so the output always parses back
// to an equal graph.
std::string SerializeEdgeList(const DirectedGraph& graph);

enum class ViolationKind { kTooSmall, kNoEdges, kHasSelfLoop, kDisconnected };

struct Violation {
  ViolationKind kind;
  std::optional<NodeId> node;  // set for kHasSelfLoop

  std::string ToString() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// A query must have at least two nodes and one edge, no self-loops, and be
// weakly connected. Returns every violation found; empty means valid.
std::vector<Violation> ValidateQuery(const DirectedGraph& graph);

// Throws Error(kInvalidQuery) listing the violations, if any.
void RequireValidQuery(const DirectedGraph& graph);

}  // namespace subgrad

#endif  // SUBGRAD_GRAPH_H_
