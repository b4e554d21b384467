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

#include "spreadlab/families.hpp"
#include "spreadlab/harness.hpp"
#include "spreadlab/structure.hpp"
#include "spreadlab/transforms.hpp"

namespace spreadlab {
namespace {

TEST(LineGraph, CompleteGraphGivesOctahedron) {
  const LineGraph l = line_graph(complete_graph(4));
  EXPECT_EQ(l.graph.order(), 6);
  EXPECT_EQ(l.graph.size(), 12);
  EXPECT_EQ(l.graph.size(), 36 / 2 - 6);
  EXPECT_TRUE(is_regular(l.graph));
  EXPECT_EQ(l.graph.degree(0), 4);
  // complement of the octahedron is a perfect matching
  EXPECT_EQ(l.graph.complement().size(), 3);
}

TEST(LineGraph, SmallCases) {
  for (int n = 3; n <= 8; ++n) {
    const Graph l = line_graph(cycle_graph(n)).graph;
    EXPECT_TRUE(is_regular(l));
    EXPECT_TRUE(is_connected(l));
    EXPECT_EQ(l.size(), n);
  }
  EXPECT_EQ(line_graph(path_graph(3)).graph, complete_graph(2));
  EXPECT_EQ(line_graph(empty_graph(4)).graph.order(), 0);
  EXPECT_EQ(line_graph(star_graph(4)).graph, complete_graph(4));
}

TEST(LineGraph, ThetaOnEveryGraphUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for_each_graph(n, false, [](const Graph& g) {
      const long long z = degree_profile(g).zagreb;
      ASSERT_EQ(z % 2, 0);
      ASSERT_EQ(line_graph(g).graph.size(), z / 2 - g.size());
    });
  }
}

TEST(EdgeIndex, SortedPositions) {
  const EdgeIndex idx = edge_index(cycle_graph(4));
  ASSERT_EQ(idx.size(), 4);
  EXPECT_EQ(idx.edges[0], Edge(0, 1));
  EXPECT_EQ(idx.edges[1], Edge(0, 3));
  EXPECT_EQ(idx.position(Edge(2, 3)), 3);
  EXPECT_EQ(idx.position(Edge(0, 2)), -1);
}

TEST(TotalGraph, BlockStructure) {
  const Graph g = path_graph(4);
  const Graph t = total_graph(g);
  const int n = g.order();
  const IntMatrix a = adjacency_matrix(t);
  const IntMatrix ag = adjacency_matrix(g);
  const IntMatrix r = incidence_matrix(g);
  const IntMatrix al = adjacency_matrix(line_graph(g).graph);
  ASSERT_EQ(t.order(), n + g.size());
  for (int i = 0; i < t.order(); ++i) {
    for (int j = 0; j < t.order(); ++j) {
      std::int64_t expected;
      if (i < n && j < n) expected = ag(i, j);
      else if (i < n) expected = r(i, j - n);
      else if (j < n) expected = r(j, i - n);
      else expected = al(i - n, j - n);
      EXPECT_EQ(a(i, j), expected) << i << "," << j;
    }
  }
  EXPECT_EQ(total_graph(complete_graph(2)), complete_graph(3));
}

TEST(TotalGraph, DegreesAndIncidenceIdentities) {
  for (int n = 1; n <= 5; ++n) {
    for_each_graph(n, false, [](const Graph& g) {
      const Graph l = line_graph(g).graph;
      const Graph t = total_graph(g);
      for (int v = 0; v < g.order(); ++v) ASSERT_EQ(t.degree(v), 2 * g.degree(v));
      for (int e = 0; e < l.order(); ++e) ASSERT_EQ(t.degree(g.order() + e), l.degree(e) + 2);
      const IntMatrix r = incidence_matrix(g);
      for (int e = 0; e < r.cols(); ++e) {
        int ones = 0;
        for (int v = 0; v < r.rows(); ++v) ones += static_cast<int>(r(v, e));
        ASSERT_EQ(ones, 2);
      }
      ASSERT_EQ(r * r.transpose(), signless_laplacian_matrix(g));
      const IntMatrix two = IntMatrix::identity(g.size()) + IntMatrix::identity(g.size());
      ASSERT_EQ(r.transpose() * r, two + adjacency_matrix(l));
    });
  }
}

}  // namespace
}  // namespace spreadlab
