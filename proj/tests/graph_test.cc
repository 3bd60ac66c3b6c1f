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
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "example_graphs.h"
#include "subgrad/error.h"

namespace subgrad {
namespace {

using ::subgrad::testing::ExampleSource;
using ::subgrad::testing::SingleEdgeQuery;
using ::subgrad::testing::TriangleQuery;
using ::testing::Contains;
using ::testing::ElementsAre;
using ::testing::IsEmpty;

std::vector<std::string> Labels(const DirectedGraph& g) {
  std::vector<std::string> out;
  for (const NodeId& id : g.nodes()) out.push_back(id.label());
  return out;
}

std::vector<std::string> EdgeStrings(const DirectedGraph& g) {
  std::vector<std::string> out;
  for (const Edge& e : g.Edges()) out.push_back(FormatEdge(e));
  return out;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected subgrad::Error";
  return ErrorCode::kIo;
}

std::optional<std::size_t> LineOf(std::string_view text) {
  try {
    ParseEdgeList(text);
  } catch (const Error& e) {
    return e.line();
  }
  return std::nullopt;
}

// Random simple digraph with arbitrary labels, insertion order and
// self-loops; node count 1..8.
DirectedGraph RandomGraph(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_int_distribution<int> coin(0, 99);
  const int n = size(rng);
  std::vector<std::string> pool = {"a", "b", "c", "x1", "10", "2", "n_3",
                                   "Z-9", "q", "nodes", "7"};
  std::shuffle(pool.begin(), pool.end(), rng);
  DirectedGraph g;
  for (int i = 0; i < n; ++i) g.AddNode(NodeId(pool[i]));
  for (NodeIndex u = 0; u < g.node_count(); ++u) {
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      if (coin(rng) < (u == v ? 10 : 30)) g.AddEdge(u, v);
    }
  }
  return g;
}

TEST(NodeIdTest, RejectsEmptyAndForeignCharacters) {
  EXPECT_EQ(CodeOf([] { NodeId(""); }), ErrorCode::kInvalidNodeId);
  EXPECT_EQ(CodeOf([] { NodeId("a b"); }), ErrorCode::kInvalidNodeId);
  EXPECT_EQ(CodeOf([] { NodeId("a\tb"); }), ErrorCode::kInvalidNodeId);
  EXPECT_EQ(CodeOf([] { NodeId("a.b"); }), ErrorCode::kInvalidNodeId);
  EXPECT_EQ(CodeOf([] { NodeId("node"); }), ErrorCode::kInvalidNodeId);
  EXPECT_NO_THROW(NodeId("A_z-09"));
  EXPECT_NO_THROW(NodeId("Node"));
}

TEST(NodeIdTest, OrderIsByteLexicographic) {
  EXPECT_LT(NodeId("10"), NodeId("2"));
  EXPECT_LT(NodeId("B"), NodeId("a"));
  EXPECT_LT(NodeId("a"), NodeId("ab"));
}

TEST(ParseEdgeListTest, TwoEdgePath) {
  const DirectedGraph g = ParseEdgeList("a b\nb c");
  EXPECT_THAT(Labels(g), ElementsAre("a", "b", "c"));
  EXPECT_THAT(EdgeStrings(g), ElementsAre("(a,b)", "(b,c)"));
}

TEST(ParseEdgeListTest, EmptyInputIsEmptyGraph) {
  EXPECT_EQ(CodeOf([] { ParseEdgeList(""); }), ErrorCode::kEmptyGraph);
  EXPECT_EQ(CodeOf([] { ParseEdgeList("# only a comment\n\n   \n"); }),
            ErrorCode::kEmptyGraph);
}

TEST(ParseEdgeListTest, SelfLoopIsAcceptedAtParseTime) {
  const DirectedGraph g = ParseEdgeList("x x");
  EXPECT_THAT(Labels(g), ElementsAre("x"));
  EXPECT_TRUE(g.HasEdge(NodeId("x"), NodeId("x")));
}

TEST(ParseEdgeListTest, CommentsBlankLinesTabsAndCrlf) {
  const DirectedGraph g = ParseEdgeList(
      "# header\r\n\r\na\t\tb   # trailing\r\n  node z\r\n\tb  a\n");
  EXPECT_THAT(Labels(g), ElementsAre("a", "b", "z"));
  EXPECT_THAT(EdgeStrings(g), ElementsAre("(a,b)", "(b,a)"));
}

TEST(ParseEdgeListTest, MalformedLinesReportLineNumbers) {
  EXPECT_EQ(CodeOf([] { ParseEdgeList("a b\nc\n"); }),
            ErrorCode::kMalformedLine);
  EXPECT_EQ(LineOf("a b\nc\n"), 2u);
  EXPECT_EQ(LineOf("# c\n\na b c\n"), 3u);
  EXPECT_EQ(LineOf("a b!\n"), 1u);
  EXPECT_EQ(LineOf("node\n"), 1u);
  EXPECT_EQ(LineOf("a b\nnode node\n"), 2u);
}

TEST(ParseEdgeListTest, DuplicateEdgeIsAnError) {
  EXPECT_EQ(CodeOf([] { ParseEdgeList("a b\nb c\na  b\n"); }),
            ErrorCode::kDuplicateEdge);
  EXPECT_EQ(LineOf("a b\nb c\na  b\n"), 3u);
  // Reverse direction is a different edge.
  EXPECT_NO_THROW(ParseEdgeList("a b\nb a\n"));
}

TEST(ParseEdgeListTest, DuplicateNodeDeclaration) {
  EXPECT_EQ(CodeOf([] { ParseEdgeList("node a\nnode a\n"); }),
            ErrorCode::kDuplicateNodeDeclaration);
  EXPECT_EQ(CodeOf([] { ParseEdgeList("a b\nnode b\n"); }),
            ErrorCode::kDuplicateNodeDeclaration);
  EXPECT_NO_THROW(ParseEdgeList("node a\na b\n"));
}

TEST(ToAdjacencyMatrixTest, SingleEdge) {
  const auto m = ToAdjacencyMatrix(SingleEdgeQuery(),
                                   std::vector{NodeId("a"), NodeId("b")});
  EXPECT_THAT(m.cells, ElementsAre(ElementsAre(0, 1), ElementsAre(0, 0)));
}

TEST(ToAdjacencyMatrixTest, SourceGraphMatchesPublishedMatrix) {
  std::vector<NodeId> order;
  for (int i = 1; i <= 6; ++i) order.emplace_back(std::to_string(i));
  const auto m = ToAdjacencyMatrix(ExampleSource(), order);
  const std::vector<std::vector<int>> expected = {
      {0, 1, 1, 1, 0, 1}, {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 0},
      {0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}};
  EXPECT_EQ(m.cells, expected);
}

TEST(ToAdjacencyMatrixTest, SingleIsolatedNode) {
  const auto m = ToAdjacencyMatrix(ParseEdgeList("node a\n"));
  EXPECT_THAT(m.cells, ElementsAre(ElementsAre(0)));
}

TEST(ToAdjacencyMatrixTest, OrderMustBeAPermutation) {
  const DirectedGraph g = TriangleQuery();
  EXPECT_EQ(CodeOf([&] {
              ToAdjacencyMatrix(g, std::vector{NodeId("a"), NodeId("b")});
            }),
            ErrorCode::kOrderMismatch);
  EXPECT_EQ(CodeOf([&] {
              ToAdjacencyMatrix(
                  g, std::vector{NodeId("a"), NodeId("b"), NodeId("b")});
            }),
            ErrorCode::kOrderMismatch);
  EXPECT_EQ(CodeOf([&] {
              ToAdjacencyMatrix(
                  g, std::vector{NodeId("a"), NodeId("b"), NodeId("d")});
            }),
            ErrorCode::kOrderMismatch);
}

TEST(ToAdjacencyMatrixTest, PermutedOrderPermutesCells) {
  const auto m = ToAdjacencyMatrix(
      TriangleQuery(), std::vector{NodeId("c"), NodeId("a"), NodeId("b")});
  // c->a, a->b, b->c
  EXPECT_THAT(m.cells, ElementsAre(ElementsAre(0, 1, 0), ElementsAre(0, 0, 1),
                                   ElementsAre(1, 0, 0)));
}

TEST(FromAdjacencyMatrixTest, TriangleMatrix) {
  const AdjacencyMatrix m{{NodeId("a"), NodeId("b"), NodeId("c")},
                          {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
  const DirectedGraph g = FromAdjacencyMatrix(m);
  EXPECT_THAT(Labels(g), ElementsAre("a", "b", "c"));
  EXPECT_THAT(EdgeStrings(g), ElementsAre("(a,b)", "(b,c)", "(c,a)"));
}

TEST(FromAdjacencyMatrixTest, SingleNode) {
  const DirectedGraph g = FromAdjacencyMatrix({{NodeId("a")}, {{0}}});
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(FromAdjacencyMatrixTest, SourceMatrixGivesTenEdges) {
  const DirectedGraph g = FromAdjacencyMatrix(ToAdjacencyMatrix(ExampleSource()));
  EXPECT_EQ(g.edge_count(), 10u);
  EXPECT_EQ(g, ExampleSource());
}

TEST(FromAdjacencyMatrixTest, RejectsMalformedMatrices) {
  EXPECT_EQ(CodeOf([] {
              FromAdjacencyMatrix({{NodeId("a"), NodeId("b")}, {{0, 1}}});
            }),
            ErrorCode::kNonSquare);
  EXPECT_EQ(CodeOf([] {
              FromAdjacencyMatrix(
                  {{NodeId("a"), NodeId("b")}, {{0, 1}, {0, 0, 0}}});
            }),
            ErrorCode::kNonSquare);
  EXPECT_EQ(CodeOf([] {
              FromAdjacencyMatrix({{NodeId("a"), NodeId("b")}, {{0, 2}, {0, 0}}});
            }),
            ErrorCode::kNonBinaryCell);
}

TEST(ValidateQueryTest, TriangleIsValid) {
  EXPECT_THAT(ValidateQuery(TriangleQuery()), IsEmpty());
}

TEST(ValidateQueryTest, SelfLoop) {
  EXPECT_THAT(ValidateQuery(ParseEdgeList("a a")),
              Contains(Violation{ViolationKind::kHasSelfLoop, NodeId("a")}));
  EXPECT_THAT(ValidateQuery(ParseEdgeList("a b\nb b\n")),
              ElementsAre(Violation{ViolationKind::kHasSelfLoop, NodeId("b")}));
}

TEST(ValidateQueryTest, Disconnected) {
  EXPECT_THAT(ValidateQuery(ParseEdgeList("a b\nc d\n")),
              ElementsAre(Violation{ViolationKind::kDisconnected, {}}));
}

TEST(ValidateQueryTest, TooSmallAndNoEdges) {
  EXPECT_THAT(ValidateQuery(ParseEdgeList("node a\n")),
              ElementsAre(Violation{ViolationKind::kTooSmall, {}},
                          Violation{ViolationKind::kNoEdges, {}}));
  EXPECT_THAT(ValidateQuery(ParseEdgeList("node a\nnode b\n")),
              ElementsAre(Violation{ViolationKind::kNoEdges, {}},
                          Violation{ViolationKind::kDisconnected, {}}));
}

TEST(ValidateQueryTest, WeakConnectivityIgnoresDirection) {
  EXPECT_THAT(ValidateQuery(ParseEdgeList("a b\nc b\n")), IsEmpty());
}

TEST(ValidateQueryTest, RequireValidQueryThrows) {
  EXPECT_EQ(CodeOf([] { RequireValidQuery(ParseEdgeList("a a")); }),
            ErrorCode::kInvalidQuery);
  EXPECT_NO_THROW(RequireValidQuery(TriangleQuery()));
}

TEST(SerializeEdgeListTest, SingleEdge) {
  EXPECT_EQ(SerializeEdgeList(SingleEdgeQuery()), "a b\n");
}

TEST(SerializeEdgeListTest, IsolatedNode) {
  EXPECT_EQ(SerializeEdgeList(ParseEdgeList("node z")), "node z\n");
}

TEST(SerializeEdgeListTest, SourceInFirstAppearanceOrderIsTenEdgeLines) {
  const std::string text =
      "1 2\n1 3\n1 4\n1 6\n2 4\n2 6\n3 5\n4 6\n5 1\n6 5\n";
  const DirectedGraph g = ParseEdgeList(text);
  // Node 6 precedes node 5 in this order, so its edge line comes first.
  EXPECT_EQ(SerializeEdgeList(g),
            "1 2\n1 3\n1 4\n1 6\n2 4\n2 6\n3 5\n4 6\n6 5\n5 1\n");
  EXPECT_EQ(ParseEdgeList(SerializeEdgeList(g)), g);
  EXPECT_EQ(ToAdjacencyMatrix(g, ExampleSource().nodes()),
            ToAdjacencyMatrix(ExampleSource()));
}

TEST(SerializeEdgeListTest, DeclaresNodesOnlyWhereOrderNeedsIt) {
  const DirectedGraph g = ExampleSource();
  const std::string text = SerializeEdgeList(g);
  EXPECT_EQ(text,
            "1 2\n1 3\n1 4\nnode 5\n1 6\n2 4\n2 6\n3 5\n4 6\n5 1\n6 5\n");
  EXPECT_EQ(ParseEdgeList(text), g);
}

TEST(SerializeEdgeListTest, SourceDeclaredBeforeItsFreshTargetGap) {
  // Node order q 2 10 a b; the edge 2->b must not pull 10 and a ahead of 2.
  DirectedGraph g;
  for (const char* label : {"q", "2", "10", "a", "b"}) g.AddNode(NodeId(label));
  g.AddEdge(NodeId("2"), NodeId("b"));
  g.AddEdge(NodeId("10"), NodeId("q"));
  EXPECT_EQ(SerializeEdgeList(g),
            "node q\nnode 2\nnode 10\nnode a\n2 b\n10 q\n");
  EXPECT_EQ(ParseEdgeList(SerializeEdgeList(g)), g);
}

TEST(GraphPropertyTest, SerializeRoundTrip) {
  std::mt19937 rng(20260101);
  for (int trial = 0; trial < 500; ++trial) {
    const DirectedGraph g = RandomGraph(rng);
    const std::string text = SerializeEdgeList(g);
    const DirectedGraph back = ParseEdgeList(text);
    ASSERT_EQ(back, g) << text;
    ASSERT_EQ(Labels(back), Labels(g));
  }
}

TEST(GraphPropertyTest, MatrixRoundTripAndDegreeSums) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const DirectedGraph g = RandomGraph(rng);
    const AdjacencyMatrix m = ToAdjacencyMatrix(g);
    ASSERT_EQ(FromAdjacencyMatrix(m), g);

    std::size_t total = 0;
    for (NodeIndex i = 0; i < g.node_count(); ++i) {
      const auto& row = m.cells[i];
      const auto row_sum = std::accumulate(row.begin(), row.end(), 0);
      int column_sum = 0;
      for (const auto& r : m.cells) column_sum += r[i];
      ASSERT_EQ(static_cast<std::size_t>(row_sum), g.OutDegree(i));
      ASSERT_EQ(static_cast<std::size_t>(column_sum), g.InDegree(i));
      total += static_cast<std::size_t>(row_sum);
    }
    ASSERT_EQ(total, g.edge_count());
  }
}

TEST(GraphPropertyTest, SourceMatrixSumsToTen) {
  std::size_t total = 0;
  for (const auto& row : ToAdjacencyMatrix(ExampleSource()).cells) {
    total += static_cast<std::size_t>(std::accumulate(row.begin(), row.end(), 0));
  }
  EXPECT_EQ(total, 10u);
}

TEST(ReadEdgeListFileTest, MissingFileIsIoError) {
  EXPECT_EQ(CodeOf([] { ReadEdgeListFile("/nonexistent/graph.edges"); }),
            ErrorCode::kIo);
}

TEST(ReadEdgeListFileTest, ErrorsNameTheFile) {
  try {
    ReadEdgeListFile(::subgrad::testing::DataPath("example/q1.edges").string() +
                     ".missing");
    FAIL();
  } catch (const Error& e) {
    EXPECT_THAT(e.what(), ::testing::HasSubstr("q1.edges.missing"));
  }
  const DirectedGraph g =
      ReadEdgeListFile(::subgrad::testing::DataPath("example/source.edges"));
  EXPECT_EQ(g, ExampleSource());
}

}  // namespace
}  // namespace subgrad
