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

#ifndef SUBGRAD_TOOLS_CLI_REPORT_H_
#define SUBGRAD_TOOLS_CLI_REPORT_H_

#include <string>
#include <string_view>

#include "subgrad/graph.h"
#include "subgrad/matcher.h"
#include "subgrad/oracle.h"

namespace subgrad::cli {

// Flat match listing preceded by a short header:
//
//   model set: (a,b)(b,c)(c,a)
//   shape: cycle, starter: a, mode: injective
//   detected: 6 matches
//   (1,3)(3,5)(5,1)  a=1 b=3 c=5
//   ...
std::string RenderMatchText(const ReferenceTable& table);

// One line per source node in NodeId order:
//
//   1: (1,3)(3,5)(5,1); (1,6)(6,5)(5,1)
//   2: -
//
// With `dedup`, a cycle match that is a rotation of a smaller one is
// followed by " = <canonical form>".
std::string RenderTableText(const ReferenceTable& table, bool dedup);

// {"query", "source", "mode", "detected", "count", "matches": [{"anchor",
// "edges", "mapping", "canonical"}]}, keys in that order, two-space indent.
std::string RenderJson(const ReferenceTable& table, std::string_view query_name,
                       std::string_view source_name);

// The source graph as a dot digraph. Edges used by at least one match carry
// [color=red,penwidth=2]. Nodes, then edges, in NodeId order.
std::string RenderDot(const DirectedGraph& source, const ReferenceTable& table);

std::string FormatMapping(const OracleMapping& mapping);

}  // namespace subgrad::cli

#endif  // SUBGRAD_TOOLS_CLI_REPORT_H_
