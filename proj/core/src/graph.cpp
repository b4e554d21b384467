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

#include "spreadlab/graph.hpp"

#include <bit>
#include <string>

#include "spreadlab/error.hpp"

namespace spreadlab {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InputError("graph order must be nonnegative");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") out of range for order " +
                       std::to_string(n));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (has_edge(e.u, e.v)) {
      throw InputError("duplicate edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    }
    set(e.u, e.v, true);
  }
}

Graph Graph::from_upper_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1u) g.set(i, j, true);
    }
  }
  return g;
}

Graph Graph::from_adjacency(int n, std::span<const std::uint8_t> dense) {
  if (dense.size() != static_cast<std::size_t>(n) * n) {
    throw InputError("adjacency size does not match order");
  }
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    if (dense[i * n + i]) throw InputError("nonzero diagonal at " + std::to_string(i));
    for (int j = i + 1; j < n; ++j) {
      const bool a = dense[i * n + j] != 0;
      const bool b = dense[j * n + i] != 0;
      if (a != b) {
        throw InputError("asymmetric adjacency at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
      if (a) g.set(i, j, true);
    }
  }
  return g;
}

void Graph::set(int i, int j, bool on) {
  const bool present = has_edge(i, j);
  if (present == on) return;
  const std::uint64_t bi = std::uint64_t{1} << (j & 63);
  const std::uint64_t bj = std::uint64_t{1} << (i & 63);
  rows_[row_offset(i) + (j >> 6)] ^= bi;
  rows_[row_offset(j) + (i >> 6)] ^= bj;
  m_ += on ? 1 : -1;
}

int Graph::degree(int i) const {
  int d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[row_offset(i) + w]);
  return d;
}

std::vector<int> Graph::neighbors(int i) const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = rows_[row_offset(i) + w];
    while (bits) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge(Edge e) const {
  if (e.u < 0 || e.v >= n_ || e.u == e.v) throw InputError("invalid edge");
  if (has_edge(e.u, e.v)) throw InputError("edge already present");
  Graph g = *this;
  g.set(e.u, e.v, true);
  return g;
}

Graph Graph::without_edge(Edge e) const {
  if (e.u < 0 || e.v >= n_ || e.u == e.v || !has_edge(e.u, e.v)) {
    throw InputError("edge not present");
  }
  Graph g = *this;
  g.set(e.u, e.v, false);
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!has_edge(u, v)) g.set(u, v, true);
    }
  }
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  Graph g(k);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (has_edge(vertices[a], vertices[b])) g.set(a, b, true);
    }
  }
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.emplace_back(e.u + n1, e.v + n1);
  return Graph(n1 + g2.order(), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.emplace_back(e.u + n1, e.v + n1);
  for (int a = 0; a < n1; ++a) {
    for (int b = 0; b < g2.order(); ++b) edges.emplace_back(a, n1 + b);
  }
  return Graph(n1 + g2.order(), edges);
}

}  // namespace spreadlab
