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

// Reference-set enumeration: every way of laying a model set's edge
// sequence onto a source graph, grouped by the source node (anchor) that
// the starter is mapped to.
//
// Matching proceeds edge by edge through the model set. For model edge
// (u, v) the candidates are the source edges consistent with whatever u and
// v are already mapped to; for a path or cycle this is a walk outward from
// the current middle element, closing on the anchor for cycles. Candidates
// are explored in NodeId order, so every row comes out sorted by edge
// sequence.
//
// Matching is non-induced: extra source edges among matched nodes are
// allowed.

#ifndef SUBGRAD_MATCHER_H_
#define SUBGRAD_MATCHER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subgrad/graph.h"
#include "subgrad/model_set.h"

namespace subgrad {

enum class MatchMode {
  // Distinct query nodes map to distinct source nodes (subgraph
  // isomorphism). The default.
  kInjective,
  // Source nodes may repeat; a pure walk match.
  kHomomorphic,
};

std::string_view MatchModeName(MatchMode mode);
std::optional<MatchMode> ParseMatchMode(std::string_view name);

// One assembled reference set.
struct Match {
  NodeId anchor;
  // Source edges, position k matching model-set edge k.
  std::vector<Edge> edges;
  // Query node -> source node.
  std::map<NodeId, NodeId> mapping;

  friend bool operator==(const Match&, const Match&) = default;
};

// Identifies a match up to cycle rotation. For cycle shapes the edge
// sequence is rotated to its lexicographically smallest rotation, which
// starts at the smallest source node; other shapes keep their sequence.
struct CanonicalKey {
  std::vector<Edge> edges;

  std::string ToString() const { return FormatEdges(edges); }

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey CanonicalizeMatch(const Match& match, QueryShape shape);
CanonicalKey CanonicalizeEdges(std::span<const Edge> edges, QueryShape shape);

// Per-anchor match lists for one model set over one source graph. Matches
// are stored compactly as source node indices and materialized on demand.
class ReferenceTable {
 public:
  struct Row {
    NodeIndex anchor;   // source node index
    std::size_t first;  // match index range [first, last)
    std::size_t last;

    std::size_t size() const { return last - first; }
    bool empty() const { return first == last; }
  };

  const ModelSet& model_set() const { return model_set_; }
  MatchMode mode() const { return mode_; }

  bool detected() const { return match_count() > 0; }
  std::size_t match_count() const {
    return query_nodes_.empty() ? 0 : assignments_.size() / query_nodes_.size();
  }

  // One row per source node, in NodeId order. An empty row means the query
  // could not be laid out from that node.
  std::span<const Row> rows() const { return rows_; }
  const NodeId& anchor(const Row& row) const { return source_nodes_[row.anchor]; }

  // Query nodes in first-appearance order along the model set; the
  // starter comes first.
  std::span<const NodeId> query_nodes() const { return query_nodes_; }
  const NodeId& source_node(NodeIndex index) const {
    return source_nodes_[index];
  }

  // Source node index for each entry of query_nodes().
  std::span<const NodeIndex> assignment(std::size_t match_index) const;

  Match match(std::size_t match_index) const;
  std::vector<Edge> match_edges(std::size_t match_index) const;
  std::vector<Match> RowMatches(const Row& row) const;
  std::vector<Match> matches() const;

  CanonicalKey canonical_key(std::size_t match_index) const;
  // Canonical key -> indices of the matches sharing it, ascending. For
  // cycle queries this groups the rotations of one source cycle.
  std::map<CanonicalKey, std::vector<std::size_t>> CanonicalGroups() const;

 private:
  friend ReferenceTable EnumerateMatches(const DirectedGraph&, const ModelSet&,
                                         MatchMode, std::size_t);

  ReferenceTable(ModelSet model_set, MatchMode mode)
      : model_set_(std::move(model_set)), mode_(mode) {}

  ModelSet model_set_;
  MatchMode mode_ = MatchMode::kInjective;
  std::vector<NodeId> query_nodes_;
  // model-set edge k as positions in query_nodes_
  std::vector<std::pair<std::uint32_t, std::uint32_t>> model_edges_;
  std::vector<NodeId> source_nodes_;
  std::vector<Row> rows_;
  std::vector<NodeIndex> assignments_;  // match_count * query_nodes_.size()
};

// All matches whose starter maps to `anchor`, sorted by edge sequence.
// Throws Error(kUnknownAnchor).
std::vector<Match> MatchAtAnchor(const DirectedGraph& source,
                                 const ModelSet& model_set,
                                 const NodeId& anchor,
                                 MatchMode mode = MatchMode::kInjective);

// Runs MatchAtAnchor for every source node. `jobs` worker threads split the
// anchors between them; the result does not depend on `jobs`.
ReferenceTable EnumerateMatches(const DirectedGraph& source,
                                const ModelSet& model_set,
                                MatchMode mode = MatchMode::kInjective,
                                std::size_t jobs = 1);

// Number of matches, without materializing them.
std::uint64_t CountMatches(const DirectedGraph& source,
                           const ModelSet& model_set,
                           MatchMode mode = MatchMode::kInjective);

// True iff the query can be laid out anywhere in the source. Stops at the
// first match. Throws Error(kInvalidQuery) for an invalid query.
bool Detected(const DirectedGraph& source, const DirectedGraph& query,
              MatchMode mode = MatchMode::kInjective);

// Number of directed walks with `length` edges starting at `anchor`: the
// anchor's row sum in the length-th power of the adjacency matrix.
// Throws Error(kUnknownAnchor).
std::uint64_t CountWalks(const DirectedGraph& source, const NodeId& anchor,
                         std::size_t length);

}  // namespace subgrad

#endif  // SUBGRAD_MATCHER_H_
