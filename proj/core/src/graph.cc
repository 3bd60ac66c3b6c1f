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

#include "subgrad/graph.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "subgrad/error.h"

namespace subgrad {
namespace {

bool IsLabelChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-';
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

std::string LineMessage(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

NodeId::NodeId(std::string label) : label_(std::move(label)) {
  if (!IsValidLabel(label_)) {
    throw Error(ErrorCode::kInvalidNodeId,
                "invalid node identifier '" + label_ + "'");
  }
}

bool NodeId::IsValidLabel(std::string_view label) {
  return !label.empty() && label != "node" &&
         std::all_of(label.begin(), label.end(), IsLabelChar);
}

std::string FormatEdge(const Edge& edge) {
  return "(" + edge.source.label() + "," + edge.target.label() + ")";
}

std::string FormatEdges(std::span<const Edge> edges) {
  std::string out;
  for (const Edge& edge : edges) out += FormatEdge(edge);
  return out;
}

NodeIndex DirectedGraph::AddNode(const NodeId& id) {
  if (index_.contains(id.label())) {
    throw Error(ErrorCode::kDuplicateNodeDeclaration,
                "node '" + id.label() + "' declared twice");
  }
  const auto index = static_cast<NodeIndex>(nodes_.size());
  nodes_.push_back(id);
  index_.emplace(id.label(), index);
  successors_.emplace_back();
  predecessors_.emplace_back();
  return index;
}

NodeIndex DirectedGraph::EnsureNode(const NodeId& id) {
  if (auto found = IndexOf(id)) return *found;
  return AddNode(id);
}

void DirectedGraph::AddEdge(NodeIndex source, NodeIndex target) {
  auto& out = successors_[source];
  auto it = std::lower_bound(out.begin(), out.end(), target);
  if (it != out.end() && *it == target) {
    throw Error(ErrorCode::kDuplicateEdge,
                "duplicate edge " + FormatEdge({nodes_[source], nodes_[target]}));
  }
  out.insert(it, target);
  auto& in = predecessors_[target];
  in.insert(std::lower_bound(in.begin(), in.end(), source), source);
  ++edge_count_;
}

void DirectedGraph::AddEdge(const NodeId& source, const NodeId& target) {
  const NodeIndex s = EnsureNode(source);
  const NodeIndex t = EnsureNode(target);
  AddEdge(s, t);
}

std::optional<NodeIndex> DirectedGraph::IndexOf(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool DirectedGraph::HasEdge(NodeIndex source, NodeIndex target) const {
  const auto& out = successors_[source];
  return std::binary_search(out.begin(), out.end(), target);
}

bool DirectedGraph::HasEdge(const NodeId& source, const NodeId& target) const {
  auto s = IndexOf(source);
  auto t = IndexOf(target);
  return s && t && HasEdge(*s, *t);
}

std::vector<Edge> DirectedGraph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count_);
  for (NodeIndex u = 0; u < nodes_.size(); ++u) {
    for (NodeIndex v : successors_[u]) edges.push_back({nodes_[u], nodes_[v]});
  }
  return edges;
}

bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
  return a.nodes_ == b.nodes_ && a.successors_ == b.successors_;
}

bool IsWeaklyConnected(const DirectedGraph& graph) {
  const std::size_t n = graph.node_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<NodeIndex> stack = {0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeIndex u = stack.back();
    stack.pop_back();
    for (auto neighbors : {graph.successors(u), graph.predecessors(u)}) {
      for (NodeIndex v : neighbors) {
        if (!seen[v]) {
          seen[v] = true;
          ++reached;
          stack.push_back(v);
        }
      }
    }
  }
  return reached == n;
}

AdjacencyMatrix ToAdjacencyMatrix(const DirectedGraph& graph,
                                  std::span<const NodeId> order) {
  const std::size_t n = graph.node_count();
  if (order.size() != n) {
    throw Error(ErrorCode::kOrderMismatch,
                "order has " + std::to_string(order.size()) +
                    " entries for a graph of " + std::to_string(n) + " nodes");
  }
  std::vector<NodeIndex> position(n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    auto index = graph.IndexOf(order[i]);
    if (!index || used[*index]) {
      throw Error(ErrorCode::kOrderMismatch,
                  "order is not a permutation of the graph's nodes (at '" +
                      order[i].label() + "')");
    }
    used[*index] = true;
    position[i] = *index;
  }
  AdjacencyMatrix matrix{{order.begin(), order.end()},
                         std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      matrix.cells[i][j] = graph.HasEdge(position[i], position[j]) ? 1 : 0;
    }
  }
  return matrix;
}

AdjacencyMatrix ToAdjacencyMatrix(const DirectedGraph& graph) {
  return ToAdjacencyMatrix(graph, graph.nodes());
}

DirectedGraph FromAdjacencyMatrix(const AdjacencyMatrix& matrix) {
  const std::size_t n = matrix.order.size();
  if (matrix.cells.size() != n) {
    throw Error(ErrorCode::kNonSquare,
                "matrix has " + std::to_string(matrix.cells.size()) +
                    " rows for " + std::to_string(n) + " labels");
  }
  for (const auto& row : matrix.cells) {
    if (row.size() != n) {
      throw Error(ErrorCode::kNonSquare, "matrix row length " +
                                             std::to_string(row.size()) +
                                             " != " + std::to_string(n));
    }
  }
  DirectedGraph graph;
  for (const NodeId& id : matrix.order) {
    if (graph.Contains(id)) {
      throw Error(ErrorCode::kOrderMismatch,
                  "label '" + id.label() + "' repeated in matrix order");
    }
    graph.AddNode(id);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int cell = matrix.cells[i][j];
      if (cell != 0 && cell != 1) {
        throw Error(ErrorCode::kNonBinaryCell,
                    "cell (" + std::to_string(i) + "," + std::to_string(j) +
                        ") = " + std::to_string(cell));
      }
      if (cell == 1) {
        graph.AddEdge(static_cast<NodeIndex>(i), static_cast<NodeIndex>(j));
      }
    }
  }
  return graph;
}

DirectedGraph ParseEdgeList(std::string_view text) {
  DirectedGraph graph;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto all_fields = SplitFields(line);
    const std::span<const std::string_view> fields(all_fields);
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw Error(ErrorCode::kMalformedLine,
                  LineMessage(line_number, "expected '<src> <dst>' or "
                                           "'node <id>'"),
                  line_number);
    }
    const bool declaration = fields[0] == "node";
    for (std::string_view field : declaration ? fields.subspan(1) : fields) {
      if (!NodeId::IsValidLabel(field)) {
        throw Error(ErrorCode::kMalformedLine,
                    LineMessage(line_number, "invalid node identifier '" +
                                                 std::string(field) + "'"),
                    line_number);
      }
    }
    try {
      if (declaration) {
        graph.AddNode(NodeId(std::string(fields[1])));
      } else {
        graph.AddEdge(NodeId(std::string(fields[0])),
                      NodeId(std::string(fields[1])));
      }
    } catch (const Error& e) {
      throw Error(e.code(), LineMessage(line_number, e.what()), line_number);
    }
  }
  if (graph.empty()) throw Error(ErrorCode::kEmptyGraph, "graph has no nodes");
  return graph;
}

DirectedGraph ReadEdgeListFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, path.string() + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseEdgeList(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what(), e.line());
  }
}

std::string SerializeEdgeList(const DirectedGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<bool> seen(n, false);
  NodeIndex next = 0;  // every node below `next` has been introduced
  std::string out;
  auto declare = [&](NodeIndex w) {
    out += "node " + graph.node(w).label() + "\n";
    seen[w] = true;
  };
  auto declare_below = [&](NodeIndex w) {
    for (; next < w; ++next) {
      if (!seen[next]) declare(next);
    }
  };
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v : graph.successors(u)) {
      declare_below(u);
      if (!seen[v] && v > u) {
        // Nodes strictly between u and v must come after u but before v, so
        // u needs its own declaration line when any of them is still unseen.
        NodeIndex gap = std::max<NodeIndex>(next, u + 1);
        while (gap < v && seen[gap]) ++gap;
        if (gap < v && !seen[u]) declare(u);
        seen[u] = true;
        declare_below(v);
      }
      seen[u] = seen[v] = true;
      out += graph.node(u).label() + " " + graph.node(v).label() + "\n";
    }
  }
  declare_below(static_cast<NodeIndex>(n));
  return out;
}

std::string Violation::ToString() const {
  switch (kind) {
    case ViolationKind::kTooSmall:
      return "TooSmall: a query needs at least two nodes";
    case ViolationKind::kNoEdges:
      return "NoEdges: a query needs at least one edge";
    case ViolationKind::kHasSelfLoop:
      return "HasSelfLoop(" + (node ? node->label() : std::string()) + ")";
    case ViolationKind::kDisconnected:
      return "Disconnected: query is not weakly connected";
  }
  return "unknown violation";
}

std::vector<Violation> ValidateQuery(const DirectedGraph& graph) {
  std::vector<Violation> violations;
  if (graph.node_count() < 2) {
    violations.push_back({ViolationKind::kTooSmall, std::nullopt});
  }
  if (graph.edge_count() == 0) {
    violations.push_back({ViolationKind::kNoEdges, std::nullopt});
  }
  for (NodeIndex u = 0; u < graph.node_count(); ++u) {
    if (graph.HasEdge(u, u)) {
      violations.push_back({ViolationKind::kHasSelfLoop, graph.node(u)});
    }
  }
  if (!IsWeaklyConnected(graph)) {
    violations.push_back({ViolationKind::kDisconnected, std::nullopt});
  }
  return violations;
}

void RequireValidQuery(const DirectedGraph& graph) {
  const auto violations = ValidateQuery(graph);
  if (violations.empty()) return;
  std::string message = "invalid query:";
  for (const auto& v : violations) message += " " + v.ToString() + ";";
  message.pop_back();
  throw Error(ErrorCode::kInvalidQuery, message);
}

}  // namespace subgrad
