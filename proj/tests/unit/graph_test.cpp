// Copyright 2026 The spreadlab Authors
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

#include <gtest/gtest.h>

#include "spreadlab/error.hpp"
#include "spreadlab/families.hpp"
#include "spreadlab/graph.hpp"

namespace spreadlab {
namespace {

TEST(Graph, EdgeNormalizesEndpoints) {
  const Edge e(3, 1);
  EXPECT_EQ(e.u, 1);
  EXPECT_EQ(e.v, 3);
  EXPECT_TRUE(e.shares_endpoint(Edge(3, 5)));
  EXPECT_FALSE(e.shares_endpoint(Edge(0, 2)));
}

TEST(Graph, ConstructionRejectsBadEdges) {
  EXPECT_THROW(Graph(3, {Edge(0, 0)}), InputError);
  EXPECT_THROW(Graph(3, {Edge(0, 3)}), InputError);
  EXPECT_THROW(Graph(3, {Edge(0, 1), Edge(1, 0)}), InputError);
  EXPECT_THROW(Graph(-1), InputError);
}

TEST(Graph, AdjacencyIsSymmetricWithEmptyDiagonal) {
  const Graph g(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
  for (int i = 0; i < 4; ++i) {
    EXPECT_FALSE(g.has_edge(i, i));
    for (int j = 0; j < 4; ++j) EXPECT_EQ(g.has_edge(i, j), g.has_edge(j, i));
  }
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.neighbors(2), (std::vector<int>{1, 3}));
}

TEST(Graph, FromAdjacencyValidates) {
  const std::vector<std::uint8_t> asym{0, 1, 0, 0};
  EXPECT_THROW(Graph::from_adjacency(2, asym), InputError);
  const std::vector<std::uint8_t> loop{1, 0, 0, 0};
  EXPECT_THROW(Graph::from_adjacency(2, loop), InputError);
  const std::vector<std::uint8_t> k2{0, 1, 1, 0};
  EXPECT_EQ(Graph::from_adjacency(2, k2), complete_graph(2));
}

TEST(Graph, UpperMaskUsesColumnOrder) {
  // bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2)
  const Graph g = Graph::from_upper_mask(3, 0b100);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(g.size(), 1);
  EXPECT_EQ(Graph::from_upper_mask(4, 0b111111), complete_graph(4));
}

TEST(Graph, EdgesAreLexicographic) {
  const Graph g(4, {Edge(2, 3), Edge(0, 3), Edge(0, 1)});
  const std::vector<Edge> expected{Edge(0, 1), Edge(0, 3), Edge(2, 3)};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_EQ(g.non_edges().size(), 3u);
}

TEST(Graph, WithAndWithoutEdge) {
  const Graph p = path_graph(4);
  const Graph c = p.with_edge(Edge(0, 3));
  EXPECT_EQ(c, cycle_graph(4));
  EXPECT_EQ(c.without_edge(Edge(0, 3)), p);
  EXPECT_THROW(p.with_edge(Edge(0, 1)), InputError);
  EXPECT_THROW(p.without_edge(Edge(0, 2)), InputError);
}

TEST(Graph, ComplementAndInduced) {
  EXPECT_EQ(complete_graph(5).complement(), empty_graph(5));
  const std::vector<int> keep{0, 1, 2};
  EXPECT_EQ(cycle_graph(5).induced(keep), path_graph(3));
}

TEST(Graph, JoinEdgeCount) {
  EXPECT_EQ(join(complete_graph(1), complete_graph(1)), complete_graph(2));
  const Graph j = join(complete_graph(1), disjoint_union(complete_graph(2), complete_graph(2)));
  EXPECT_EQ(j.order(), 5);
  EXPECT_EQ(j.size(), 2 + 0 + 4);
  EXPECT_EQ(join(complete_graph(2), complete_graph(3)), complete_graph(5));
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const Graph g1 = cycle_graph(3 + a % 2);
      const Graph g2 = path_graph(b);
      EXPECT_EQ(join(g1, g2).size(), g1.size() + g2.size() + g1.order() * g2.order());
    }
  }
}

TEST(Graph, LargeOrderUsesSeveralWords) {
  Graph g = cycle_graph(130);
  EXPECT_EQ(g.size(), 130);
  EXPECT_TRUE(g.has_edge(0, 129));
  EXPECT_EQ(g.degree(64), 2);
  EXPECT_EQ(g.complement().size(), 130 * 129 / 2 - 130);
}

}  // namespace
}  // namespace spreadlab
