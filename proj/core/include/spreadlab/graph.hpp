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

#ifndef SPREADLAB_GRAPH_HPP_
#define SPREADLAB_GRAPH_HPP_

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spreadlab {

// Undirected edge with normalized endpoints (u < v).
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool shares_endpoint(const Edge& other) const {
    return u == other.u || u == other.v || v == other.u || v == other.v;
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1, stored as a dense bit matrix.
//
// Every constructor validates symmetry and the zero diagonal, so a Graph
// value always satisfies those invariants. Mutation goes through the
// copy-returning helpers (`with_edge`, `without_edge`).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  // Graph whose edge set is given by bit b of `mask` for the b-th pair in
  // graph6 column order: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
  static Graph from_upper_mask(int n, std::uint64_t mask);
  static Graph from_adjacency(int n, std::span<const std::uint8_t> dense);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool has_edge(int i, int j) const {
    return (rows_[row_offset(i) + (j >> 6)] >> (j & 63)) & 1u;
  }
  int degree(int i) const;
  std::vector<int> neighbors(int i) const;
  // Edges in lexicographic order (u, v) with u < v.
  std::vector<Edge> edges() const;
  std::vector<Edge> non_edges() const;

  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;
  Graph complement() const;
  Graph induced(std::span<const int> vertices) const;

  // Bit mask of neighbours; only valid when order() <= 64.
  std::uint64_t row_mask(int i) const { return rows_[row_offset(i)]; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t row_offset(int i) const {
    return static_cast<std::size_t>(i) * words_;
  }
  void set(int i, int j, bool on);

  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Disjoint union: g2's vertices are shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Disjoint union plus every edge between the two sides.
Graph join(const Graph& g1, const Graph& g2);

}  // namespace spreadlab

#endif  // SPREADLAB_GRAPH_HPP_
