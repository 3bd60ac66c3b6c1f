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

#include "cli/report.h"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "nlohmann/json.hpp"

namespace subgrad::cli {
namespace {

std::string Quoted(const NodeId& id) { return "\"" + id.label() + "\""; }

}  // namespace

std::string RenderMatchText(const ReferenceTable& table) {
  const ModelSet& model = table.model_set();
  std::string out;
  out += "model set: " + FormatEdges(model.edges) + "\n";
  out += "shape: " + std::string(QueryShapeName(model.shape)) +
         ", starter: " + model.starter.label() +
         ", mode: " + std::string(MatchModeName(table.mode())) + "\n";
  if (!table.detected()) {
    out += "not detected\n";
    return out;
  }
  const std::size_t count = table.match_count();
  out += "detected: " + std::to_string(count) +
         (count == 1 ? " match\n" : " matches\n");
  const auto query_nodes = table.query_nodes();
  for (std::size_t i = 0; i < count; ++i) {
    out += FormatEdges(table.match_edges(i)) + " ";
    const auto assignment = table.assignment(i);
    for (std::size_t q = 0; q < query_nodes.size(); ++q) {
      out += " " + query_nodes[q].label() + "=" +
             table.source_node(assignment[q]).label();
    }
    out += "\n";
  }
  return out;
}

std::string RenderTableText(const ReferenceTable& table, bool dedup) {
  const bool annotate = dedup && table.model_set().shape == QueryShape::kCycle;
  std::string out;
  for (const auto& row : table.rows()) {
    out += table.anchor(row).label() + ":";
    if (row.empty()) {
      out += " -\n";
      continue;
    }
    for (std::size_t i = row.first; i < row.last; ++i) {
      const auto edges = table.match_edges(i);
      out += (i == row.first ? " " : "; ") + FormatEdges(edges);
      if (annotate) {
        const CanonicalKey key = CanonicalizeEdges(edges, QueryShape::kCycle);
        if (key.edges != edges) out += " = " + key.ToString();
      }
    }
    out += "\n";
  }
  return out;
}

std::string RenderJson(const ReferenceTable& table, std::string_view query_name,
                       std::string_view source_name) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["query"] = std::string(query_name);
  doc["source"] = std::string(source_name);
  doc["mode"] = std::string(MatchModeName(table.mode()));
  doc["detected"] = table.detected();
  doc["count"] = table.match_count();
  doc["matches"] = ordered_json::array();
  for (std::size_t i = 0; i < table.match_count(); ++i) {
    const Match match = table.match(i);
    ordered_json entry;
    entry["anchor"] = match.anchor.label();
    entry["edges"] = ordered_json::array();
    for (const Edge& edge : match.edges) {
      entry["edges"].push_back({edge.source.label(), edge.target.label()});
    }
    entry["mapping"] = ordered_json::object();
    for (const auto& [q, s] : match.mapping) entry["mapping"][q.label()] = s.label();
    entry["canonical"] =
        CanonicalizeMatch(match, table.model_set().shape).ToString();
    doc["matches"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string RenderDot(const DirectedGraph& source, const ReferenceTable& table) {
  std::set<std::pair<NodeIndex, NodeIndex>> used;
  const auto query_nodes = table.query_nodes();
  const auto& model = table.model_set();
  std::vector<std::pair<std::size_t, std::size_t>> model_positions;
  for (const Edge& edge : model.edges) {
    auto pos = [&](const NodeId& id) {
      return static_cast<std::size_t>(
          std::find(query_nodes.begin(), query_nodes.end(), id) -
          query_nodes.begin());
    };
    model_positions.emplace_back(pos(edge.source), pos(edge.target));
  }
  for (std::size_t i = 0; i < table.match_count(); ++i) {
    const auto assignment = table.assignment(i);
    for (const auto& [u, v] : model_positions) {
      used.emplace(assignment[u], assignment[v]);
    }
  }

  std::vector<NodeIndex> order(source.node_count());
  for (NodeIndex i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
    return source.node(a) < source.node(b);
  });

  std::string out = "digraph G {\n";
  for (NodeIndex u : order) out += "  " + Quoted(source.node(u)) + ";\n";
  for (NodeIndex u : order) {
    std::vector<NodeIndex> targets(source.successors(u).begin(),
                                   source.successors(u).end());
    std::sort(targets.begin(), targets.end(), [&](NodeIndex a, NodeIndex b) {
      return source.node(a) < source.node(b);
    });
    for (NodeIndex v : targets) {
      out += "  " + Quoted(source.node(u)) + " -> " + Quoted(source.node(v));
      if (used.contains({u, v})) out += " [color=red,penwidth=2]";
      out += ";\n";
    }
  }
  out += "}\n";
  return out;
}

std::string FormatMapping(const OracleMapping& mapping) {
  std::string out = "{";
  for (const auto& [q, s] : mapping) {
    if (out.size() > 1) out += ",";
    out += q.label() + "=" + s.label();
  }
  return out + "}";
}

}  // namespace subgrad::cli
