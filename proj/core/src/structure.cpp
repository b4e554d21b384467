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

#include "spreadlab/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>

#include "spreadlab/error.hpp"

namespace spreadlab {
namespace {

constexpr int kUnreached = -1;

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), kUnreached);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Dense residual network for unit-capacity max-flow on small graphs.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes)
      : nodes_(nodes), cap_(static_cast<std::size_t>(nodes) * nodes, 0) {}

  void add_arc(int from, int to, int capacity) { cap_[index(from, to)] += capacity; }

  // Augments until `limit` units are pushed or no path remains.
  int max_flow(int source, int sink, int limit) {
    int flow = 0;
    std::vector<int> parent(nodes_);
    while (flow < limit) {
      std::fill(parent.begin(), parent.end(), kUnreached);
      parent[source] = source;
      std::deque<int> queue{source};
      while (!queue.empty() && parent[sink] == kUnreached) {
        const int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < nodes_; ++v) {
          if (parent[v] == kUnreached && cap_[index(u, v)] > 0) {
            parent[v] = u;
            queue.push_back(v);
          }
        }
      }
      if (parent[sink] == kUnreached) break;
      for (int v = sink; v != source; v = parent[v]) {
        --cap_[index(parent[v], v)];
        ++cap_[index(v, parent[v])];
      }
      ++flow;
    }
    return flow;
  }

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * nodes_ + b;
  }
  int nodes_;
  std::vector<int> cap_;
};

// Internally vertex-disjoint s-t paths, for non-adjacent s, t.
int local_vertex_connectivity(const Graph& g, int s, int t, int limit) {
  const int n = g.order();
  // v_in = 2v, v_out = 2v+1
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, n);
    net.add_arc(2 * e.v + 1, 2 * e.u, n);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

int local_edge_connectivity(const Graph& g, int s, int t, int limit) {
  FlowNetwork net(g.order());
  for (const Edge& e : g.edges()) {
    net.add_arc(e.u, e.v, 1);
    net.add_arc(e.v, e.u, 1);
  }
  return net.max_flow(s, t, limit);
}

// Diameter of the tree induced on bit set `s` (known to be a tree).
int tree_diameter_bits(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  const auto farthest = [&](int start, int& far_vertex) {
    std::uint32_t seen = std::uint32_t{1} << start;
    std::uint32_t frontier = seen;
    int depth = 0;
    far_vertex = start;
    while (true) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) {
        next |= adj[std::countr_zero(f)];
      }
      next &= s & ~seen;
      if (!next) break;
      seen |= next;
      frontier = next;
      far_vertex = std::countr_zero(next);
      ++depth;
    }
    return depth;
  };
  int a = 0;
  farthest(std::countr_zero(s), a);
  int b = 0;
  return farthest(a, b);
}

bool connected_bits(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  std::uint32_t seen = s & (~s + 1);
  std::uint32_t frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

}  // namespace

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.order());
  for (int i = 0; i < g.order(); ++i) {
    const int d = g.degree(i);
    p.degrees[i] = d;
    p.zagreb += static_cast<long long>(d) * d;
  }
  if (!p.degrees.empty()) {
    const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
  }
  return p;
}

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(g.order(), kUnreached);
  int next = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (label[s] != kUnreached) continue;
    std::vector<int> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (label[w] == kUnreached) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int component_count(const Graph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

namespace {

// 2-coloring per component; returns per-component bipartiteness.
std::vector<bool> bipartite_by_component(const Graph& g) {
  const auto labels = component_labels(g);
  const int k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<bool> ok(k, true);
  std::vector<int> color(g.order(), kUnreached);
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] != kUnreached) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (color[w] == kUnreached) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          ok[labels[u]] = false;
        }
      }
    }
  }
  return ok;
}

}  // namespace

bool is_bipartite(const Graph& g) {
  const auto ok = bipartite_by_component(g);
  return std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
}

bool has_bipartite_component(const Graph& g) {
  const auto ok = bipartite_by_component(g);
  return std::any_of(ok.begin(), ok.end(), [](bool b) { return b; });
}

bool is_regular(const Graph& g) {
  for (int i = 1; i < g.order(); ++i) {
    if (g.degree(i) != g.degree(0)) return false;
  }
  return true;
}

bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (g.size() == n * (n - 1) / 2) return n - 1;
  if (!is_connected(g)) return 0;
  // Some vertex among the first best+1 lies outside a minimum separator, so
  // pairs rooted there suffice.
  int best = degree_profile(g).min_degree;
  for (int s = 0; s <= best && s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (t == s || g.has_edge(s, t)) continue;
      best = std::min(best, local_vertex_connectivity(g, s, t, best));
    }
  }
  return best;
}

int edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  int best = degree_profile(g).min_degree;
  for (int t = 1; t < n && best > 0; ++t) {
    best = std::min(best, local_edge_connectivity(g, 0, t, best));
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, kUnreached);
    std::vector<int> parent(n, kUnreached);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::optional<int> diameter(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    const auto dist = bfs_distances(g, s);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

ConnectivityProfile connectivity_profile(const Graph& g) {
  ConnectivityProfile p;
  p.is_connected = is_connected(g);
  p.vertex_connectivity = vertex_connectivity(g);
  p.edge_connectivity = edge_connectivity(g);
  p.girth = girth(g);
  p.diameter = diameter(g);
  p.is_bipartite = is_bipartite(g);
  p.is_regular = is_regular(g);
  if (p.is_regular && g.order() > 0) p.regular_degree = g.degree(0);
  return p;
}

int max_induced_tree_diameter(const Graph& g) {
  const int n = g.order();
  if (n > kMaxInducedTreeOrder) {
    throw CapacityError("max_induced_tree_diameter is exhaustive; order " +
                        std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxInducedTreeOrder));
  }
  std::vector<std::uint32_t> adj(n);
  for (int i = 0; i < n; ++i) adj[i] = static_cast<std::uint32_t>(g.row_mask(i));
  int best = 0;
  const std::uint32_t limit = n == 0 ? 0 : (n == 32 ? ~0u : (1u << n) - 1);
  for (std::uint32_t s = 1; s != 0 && s <= limit; ++s) {
    const int size = std::popcount(s);
    // A subset can only beat `best` with at least best+2 vertices.
    if (size < best + 2) continue;
    int twice_edges = 0;
    for (std::uint32_t f = s; f; f &= f - 1) {
      twice_edges += std::popcount(adj[std::countr_zero(f)] & s);
    }
    if (twice_edges != 2 * (size - 1)) continue;
    if (!connected_bits(adj, s)) continue;
    best = std::max(best, tree_diameter_bits(adj, s));
  }
  return best;
}

int max_cycle_branch_diameter(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g) || g.size() != n) {
    throw HypothesisError("cycle branches need a connected unicyclic graph");
  }
  // Peel leaves; what remains is the unique cycle.
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const int v = leaves.back();
    leaves.pop_back();
    removed[v] = true;
    for (int w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
    }
  }
  std::vector<Edge> branch_edges;
  for (const Edge& e : g.edges()) {
    if (removed[e.u] || removed[e.v]) branch_edges.push_back(e);
  }
  const Graph forest(n, branch_edges);
  const auto labels = component_labels(forest);
  int best = 0;
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    std::vector<int> members;
    for (int w = 0; w < n; ++w) {
      if (labels[w] == labels[v]) members.push_back(w);
    }
    best = std::max(best, diameter(forest.induced(members)).value_or(0));
  }
  return best;
}

}  // namespace spreadlab
