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

#ifndef SPREADLAB_TRANSFORMS_HPP_
#define SPREADLAB_TRANSFORMS_HPP_

#include <vector>

#include "spreadlab/graph.hpp"
#include "spreadlab/matrix.hpp"

namespace spreadlab {

// Lexicographically sorted edge list; position = label of the edge as a
// vertex of the line graph, and as vertex order()+position of the total graph.
struct EdgeIndex {
  std::vector<Edge> edges;

  int size() const noexcept { return static_cast<int>(edges.size()); }
  int position(Edge e) const;  // -1 when absent
};

EdgeIndex edge_index(const Graph& g);

struct LineGraph {
  Graph graph;
  EdgeIndex index;
};

// Vertices are the edges of g (in EdgeIndex order); adjacent iff they share
// an endpoint. Has Z_g/2 - m edges.
LineGraph line_graph(const Graph& g);

// Vertices 0..n-1 are g's vertices, n..n+m-1 its edges. Adjacency blocks are
// [[A(G), R], [Rᵗ, A(L(G))]] with R the incidence matrix.
Graph total_graph(const Graph& g);

// n × m 0/1 matrix, r(v, e) = 1 iff v is an endpoint of edge e.
// Satisfies R Rᵗ = Q(G) and Rᵗ R = 2I + A(L(G)).
IntMatrix incidence_matrix(const Graph& g);

}  // namespace spreadlab

#endif  // SPREADLAB_TRANSFORMS_HPP_
