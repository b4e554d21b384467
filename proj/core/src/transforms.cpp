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

#include "spreadlab/transforms.hpp"

#include <algorithm>

namespace spreadlab {

int EdgeIndex::position(Edge e) const {
  const auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) return -1;
  return static_cast<int>(it - edges.begin());
}

EdgeIndex edge_index(const Graph& g) { return EdgeIndex{g.edges()}; }

LineGraph line_graph(const Graph& g) {
  EdgeIndex index = edge_index(g);
  const auto& e = index.edges;
  std::vector<Edge> adj;
  for (int a = 0; a < index.size(); ++a) {
    for (int b = a + 1; b < index.size(); ++b) {
      if (e[a].shares_endpoint(e[b])) adj.emplace_back(a, b);
    }
  }
  return LineGraph{Graph(index.size(), adj), std::move(index)};
}

Graph total_graph(const Graph& g) {
  const int n = g.order();
  const LineGraph lg = line_graph(g);
  std::vector<Edge> edges = g.edges();
  for (int k = 0; k < lg.index.size(); ++k) {
    edges.emplace_back(lg.index.edges[k].u, n + k);
    edges.emplace_back(lg.index.edges[k].v, n + k);
  }
  for (const Edge& e : lg.graph.edges()) edges.emplace_back(n + e.u, n + e.v);
  return Graph(n + lg.index.size(), edges);
}

IntMatrix incidence_matrix(const Graph& g) {
  const auto edges = g.edges();
  IntMatrix r(g.order(), static_cast<int>(edges.size()));
  for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
    r(edges[k].u, k) = 1;
    r(edges[k].v, k) = 1;
  }
  return r;
}

}  // namespace spreadlab
