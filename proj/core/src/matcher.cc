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

#include "subgrad/matcher.h"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <utility>

#include "subgrad/error.h"

namespace subgrad {
namespace {

using Rank = std::uint32_t;
constexpr Rank kUnassigned = static_cast<Rank>(-1);

// The source graph relabelled so that node rank order equals NodeId order,
// with rank-sorted CSR adjacency in both directions. Iterating a neighbour
// list therefore visits candidate edges in lexicographic order.
class RankedSource {
 public:
  explicit RankedSource(const DirectedGraph& graph) {
    const std::size_t n = graph.node_count();
    index_of_.resize(n);
    std::iota(index_of_.begin(), index_of_.end(), NodeIndex{0});
    std::sort(index_of_.begin(), index_of_.end(),
              [&](NodeIndex a, NodeIndex b) {
                return graph.node(a) < graph.node(b);
              });
    rank_of_.resize(n);
    for (Rank r = 0; r < n; ++r) rank_of_[index_of_[r]] = r;

    auto build = [&](auto neighbours_of, std::vector<std::size_t>& offsets,
                     std::vector<Rank>& targets) {
      offsets.assign(n + 1, 0);
      targets.reserve(graph.edge_count());
      for (Rank r = 0; r < n; ++r) {
        const auto first = targets.size();
        for (NodeIndex v : neighbours_of(index_of_[r])) {
          targets.push_back(rank_of_[v]);
        }
        std::sort(targets.begin() + static_cast<std::ptrdiff_t>(first),
                  targets.end());
        offsets[r + 1] = targets.size();
      }
    };
    build([&](NodeIndex u) { return graph.successors(u); }, out_offsets_,
          out_);
    build([&](NodeIndex u) { return graph.predecessors(u); }, in_offsets_,
          in_);
  }

  std::size_t size() const { return index_of_.size(); }
  NodeIndex index_of(Rank r) const { return index_of_[r]; }
  Rank rank_of(NodeIndex i) const { return rank_of_[i]; }

  std::span<const Rank> out(Rank r) const {
    return {out_.data() + out_offsets_[r], out_offsets_[r + 1] - out_offsets_[r]};
  }
  std::span<const Rank> in(Rank r) const {
    return {in_.data() + in_offsets_[r], in_offsets_[r + 1] - in_offsets_[r]};
  }
  bool HasEdge(Rank u, Rank v) const {
    auto list = out(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

 private:
  std::vector<NodeIndex> index_of_;
  std::vector<Rank> rank_of_;
  std::vector<std::size_t> out_offsets_, in_offsets_;
  std::vector<Rank> out_, in_;
};

// Model set with query nodes numbered in first-appearance order; the
// starter is node 0.
struct CompiledModel {
  std::vector<NodeId> nodes;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

CompiledModel Compile(const ModelSet& model_set) {
  if (model_set.edges.empty()) {
    throw Error(ErrorCode::kInvalidQuery, "model set has no edges");
  }
  CompiledModel model;
  auto position = [&](const NodeId& id) {
    auto it = std::find(model.nodes.begin(), model.nodes.end(), id);
    if (it != model.nodes.end()) {
      return static_cast<std::uint32_t>(it - model.nodes.begin());
    }
    model.nodes.push_back(id);
    return static_cast<std::uint32_t>(model.nodes.size() - 1);
  };
  position(model_set.starter);
  for (const Edge& edge : model_set.edges) {
    if (edge.source == edge.target) {
      throw Error(ErrorCode::kInvalidQuery,
                  "model set contains self-loop " + FormatEdge(edge));
    }
    const auto u = position(edge.source);
    const auto v = position(edge.target);
    model.edges.emplace_back(u, v);
  }
  return model;
}

// Edge-at-a-time backtracking for one anchor at a time. Not thread-safe;
// each worker owns one.
class Backtracker {
 public:
  Backtracker(const RankedSource& source, const CompiledModel& model,
              MatchMode mode)
      : source_(source),
        model_(model),
        injective_(mode == MatchMode::kInjective),
        assigned_(model.nodes.size(), kUnassigned),
        in_use_(injective_ ? source.size() : 0, 0) {}

  // Calls sink(assigned ranks) for each match; stops early when the sink
  // returns false. Returns false iff stopped early.
  template <typename Sink>
  bool Run(Rank anchor, Sink&& sink) {
    Assign(0, anchor);
    const bool finished = Extend(0, sink);
    Unassign(0);
    return finished;
  }

 private:
  void Assign(std::uint32_t q, Rank r) {
    assigned_[q] = r;
    if (injective_) in_use_[r] = 1;
  }
  void Unassign(std::uint32_t q) {
    if (injective_) in_use_[assigned_[q]] = 0;
    assigned_[q] = kUnassigned;
  }
  bool Free(Rank r) const { return !injective_ || !in_use_[r]; }

  template <typename Sink>
  bool Extend(std::size_t k, Sink& sink) {
    if (k == model_.edges.size()) {
      return sink(std::span<const Rank>(assigned_));
    }
    const auto [u, v] = model_.edges[k];
    const Rank su = assigned_[u];
    const Rank sv = assigned_[v];
    if (su != kUnassigned && sv != kUnassigned) {
      return !source_.HasEdge(su, sv) || Extend(k + 1, sink);
    }
    if (su != kUnassigned) {
      return ExtendOne(k, v, source_.out(su), sink);
    }
    if (sv != kUnassigned) {
      return ExtendOne(k, u, source_.in(sv), sink);
    }
    // Neither endpoint placed yet; only reachable for a model set that is
    // not chained. Try every source edge in order.
    for (Rank a = 0; a < source_.size(); ++a) {
      if (!Free(a)) continue;
      Assign(u, a);
      const bool go_on = ExtendOne(k, v, source_.out(a), sink);
      Unassign(u);
      if (!go_on) return false;
    }
    return true;
  }

  template <typename Sink>
  bool ExtendOne(std::size_t k, std::uint32_t q, std::span<const Rank> options,
                 Sink& sink) {
    for (Rank r : options) {
      if (!Free(r)) continue;
      Assign(q, r);
      const bool go_on = Extend(k + 1, sink);
      Unassign(q);
      if (!go_on) return false;
    }
    return true;
  }

  const RankedSource& source_;
  const CompiledModel& model_;
  bool injective_;
  std::vector<Rank> assigned_;
  std::vector<char> in_use_;
};

// Lexicographic comparison of two matches' edge sequences, in rank space.
bool EdgeSequenceLess(const CompiledModel& model, const RankedSource& source,
                      std::span<const NodeIndex> a,
                      std::span<const NodeIndex> b) {
  for (const auto& [u, v] : model.edges) {
    const auto ea = std::pair(source.rank_of(a[u]), source.rank_of(a[v]));
    const auto eb = std::pair(source.rank_of(b[u]), source.rank_of(b[v]));
    if (ea != eb) return ea < eb;
  }
  return false;
}

// Sorts the matches of one row if they are not already in order. The
// backtracker emits them sorted, so this normally only scans.
void EnsureRowSorted(const CompiledModel& model, const RankedSource& source,
                     std::vector<NodeIndex>& flat) {
  const std::size_t width = model.nodes.size();
  const std::size_t count = flat.size() / width;
  auto at = [&](std::size_t i) {
    return std::span<const NodeIndex>(flat.data() + i * width, width);
  };
  bool sorted = true;
  for (std::size_t i = 1; i < count && sorted; ++i) {
    sorted = !EdgeSequenceLess(model, source, at(i), at(i - 1));
  }
  if (sorted) return;
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return EdgeSequenceLess(model, source, at(i), at(j));
  });
  std::vector<NodeIndex> reordered;
  reordered.reserve(flat.size());
  for (std::size_t i : order) {
    auto m = at(i);
    reordered.insert(reordered.end(), m.begin(), m.end());
  }
  flat = std::move(reordered);
}

std::vector<NodeIndex> CollectRow(const RankedSource& source,
                                  const CompiledModel& model,
                                  Backtracker& backtracker, Rank anchor) {
  std::vector<NodeIndex> flat;
  backtracker.Run(anchor, [&](std::span<const Rank> ranks) {
    for (Rank r : ranks) flat.push_back(source.index_of(r));
    return true;
  });
  EnsureRowSorted(model, source, flat);
  return flat;
}

Match MakeMatch(std::span<const NodeId> query_nodes,
                std::span<const std::pair<std::uint32_t, std::uint32_t>> edges,
                std::span<const NodeIndex> assignment,
                const auto& source_node) {
  Match match{source_node(assignment[0]), {}, {}};
  match.edges.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    match.edges.push_back({source_node(assignment[u]), source_node(assignment[v])});
  }
  for (std::size_t q = 0; q < query_nodes.size(); ++q) {
    match.mapping.emplace(query_nodes[q], source_node(assignment[q]));
  }
  return match;
}

}  // namespace

std::string_view MatchModeName(MatchMode mode) {
  return mode == MatchMode::kInjective ? "injective" : "homomorphic";
}

std::optional<MatchMode> ParseMatchMode(std::string_view name) {
  if (name == "injective") return MatchMode::kInjective;
  if (name == "homomorphic") return MatchMode::kHomomorphic;
  return std::nullopt;
}

CanonicalKey CanonicalizeEdges(std::span<const Edge> edges, QueryShape shape) {
  CanonicalKey key{{edges.begin(), edges.end()}};
  if (shape != QueryShape::kCycle || edges.empty()) return key;
  std::vector<Edge> rotated(key.edges);
  for (std::size_t shift = 1; shift < edges.size(); ++shift) {
    std::rotate_copy(edges.begin(),
                     edges.begin() + static_cast<std::ptrdiff_t>(shift),
                     edges.end(), rotated.begin());
    if (rotated < key.edges) key.edges = rotated;
  }
  return key;
}

CanonicalKey CanonicalizeMatch(const Match& match, QueryShape shape) {
  return CanonicalizeEdges(match.edges, shape);
}

std::span<const NodeIndex> ReferenceTable::assignment(
    std::size_t match_index) const {
  const std::size_t width = query_nodes_.size();
  return {assignments_.data() + match_index * width, width};
}

Match ReferenceTable::match(std::size_t match_index) const {
  return MakeMatch(query_nodes_, model_edges_, assignment(match_index),
                   [&](NodeIndex i) -> const NodeId& { return source_nodes_[i]; });
}

std::vector<Edge> ReferenceTable::match_edges(std::size_t match_index) const {
  const auto a = assignment(match_index);
  std::vector<Edge> edges;
  edges.reserve(model_edges_.size());
  for (const auto& [u, v] : model_edges_) {
    edges.push_back({source_nodes_[a[u]], source_nodes_[a[v]]});
  }
  return edges;
}

std::vector<Match> ReferenceTable::RowMatches(const Row& row) const {
  std::vector<Match> out;
  out.reserve(row.size());
  for (std::size_t i = row.first; i < row.last; ++i) out.push_back(match(i));
  return out;
}

std::vector<Match> ReferenceTable::matches() const {
  std::vector<Match> out;
  out.reserve(match_count());
  for (std::size_t i = 0; i < match_count(); ++i) out.push_back(match(i));
  return out;
}

CanonicalKey ReferenceTable::canonical_key(std::size_t match_index) const {
  return CanonicalizeEdges(match_edges(match_index), model_set_.shape);
}

std::map<CanonicalKey, std::vector<std::size_t>>
ReferenceTable::CanonicalGroups() const {
  std::map<CanonicalKey, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < match_count(); ++i) {
    groups[canonical_key(i)].push_back(i);
  }
  return groups;
}

std::vector<Match> MatchAtAnchor(const DirectedGraph& source,
                                 const ModelSet& model_set,
                                 const NodeId& anchor, MatchMode mode) {
  const auto anchor_index = source.IndexOf(anchor);
  if (!anchor_index) {
    throw Error(ErrorCode::kUnknownAnchor,
                "anchor '" + anchor.label() + "' is not a source node");
  }
  const CompiledModel model = Compile(model_set);
  const RankedSource ranked(source);
  Backtracker backtracker(ranked, model, mode);
  const auto flat =
      CollectRow(ranked, model, backtracker, ranked.rank_of(*anchor_index));

  const std::size_t width = model.nodes.size();
  std::vector<Match> matches;
  for (std::size_t i = 0; i * width < flat.size(); ++i) {
    matches.push_back(MakeMatch(
        model.nodes, model.edges,
        std::span<const NodeIndex>(flat.data() + i * width, width),
        [&](NodeIndex n) -> const NodeId& { return source.node(n); }));
  }
  return matches;
}

ReferenceTable EnumerateMatches(const DirectedGraph& source,
                                const ModelSet& model_set, MatchMode mode,
                                std::size_t jobs) {
  CompiledModel model = Compile(model_set);
  const RankedSource ranked(source);
  const std::size_t n = ranked.size();

  std::vector<std::vector<NodeIndex>> per_anchor(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Backtracker backtracker(ranked, model, mode);
    for (std::size_t r = next++; r < n; r = next++) {
      per_anchor[r] =
          CollectRow(ranked, model, backtracker, static_cast<Rank>(r));
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
  }

  ReferenceTable table(model_set, mode);
  table.model_edges_ = model.edges;
  table.query_nodes_ = std::move(model.nodes);
  table.source_nodes_.assign(source.nodes().begin(), source.nodes().end());

  const std::size_t width = table.query_nodes_.size();
  std::size_t total = 0;
  for (const auto& flat : per_anchor) total += flat.size();
  table.assignments_.reserve(total);
  table.rows_.reserve(n);
  for (Rank r = 0; r < n; ++r) {
    const std::size_t first = table.assignments_.size() / width;
    auto& flat = per_anchor[r];
    table.assignments_.insert(table.assignments_.end(), flat.begin(),
                              flat.end());
    std::vector<NodeIndex>().swap(flat);
    table.rows_.push_back(
        {ranked.index_of(r), first, table.assignments_.size() / width});
  }
  return table;
}

std::uint64_t CountMatches(const DirectedGraph& source,
                           const ModelSet& model_set, MatchMode mode) {
  const CompiledModel model = Compile(model_set);
  const RankedSource ranked(source);
  Backtracker backtracker(ranked, model, mode);
  std::uint64_t count = 0;
  for (Rank r = 0; r < ranked.size(); ++r) {
    backtracker.Run(r, [&](std::span<const Rank>) {
      ++count;
      return true;
    });
  }
  return count;
}

bool Detected(const DirectedGraph& source, const DirectedGraph& query,
              MatchMode mode) {
  RequireValidQuery(query);
  const CompiledModel model = Compile(BuildModelSet(query));
  const RankedSource ranked(source);
  Backtracker backtracker(ranked, model, mode);
  for (Rank r = 0; r < ranked.size(); ++r) {
    const bool exhausted =
        backtracker.Run(r, [](std::span<const Rank>) { return false; });
    if (!exhausted) return true;
  }
  return false;
}

std::uint64_t CountWalks(const DirectedGraph& source, const NodeId& anchor,
                         std::size_t length) {
  const auto start = source.IndexOf(anchor);
  if (!start) {
    throw Error(ErrorCode::kUnknownAnchor,
                "anchor '" + anchor.label() + "' is not a source node");
  }
  // Row vector e_anchor multiplied by the adjacency matrix `length` times.
  const std::size_t n = source.node_count();
  std::vector<std::uint64_t> row(n, 0), next(n, 0);
  row[*start] = 1;
  for (std::size_t step = 0; step < length; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (NodeIndex u = 0; u < n; ++u) {
      if (row[u] == 0) continue;
      for (NodeIndex v : source.successors(u)) next[v] += row[u];
    }
    row.swap(next);
  }
  return std::accumulate(row.begin(), row.end(), std::uint64_t{0});
}

}  // namespace subgrad
