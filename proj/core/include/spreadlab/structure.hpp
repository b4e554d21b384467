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

#ifndef SPREADLAB_STRUCTURE_HPP_
#define SPREADLAB_STRUCTURE_HPP_

#include <optional>
#include <vector>

#include "spreadlab/graph.hpp"

namespace spreadlab {

struct DegreeProfile {
  std::vector<int> degrees;
  int min_degree = 0;
  int max_degree = 0;
  long long zagreb = 0;  // sum of squared degrees
};

// Girth and diameter use std::nullopt for "infinite" (forest / disconnected).
struct ConnectivityProfile {
  bool is_connected = false;
  int vertex_connectivity = 0;
  int edge_connectivity = 0;
  std::optional<int> girth;
  std::optional<int> diameter;
  bool is_bipartite = false;
  bool is_regular = false;
  std::optional<int> regular_degree;
};

DegreeProfile degree_profile(const Graph& g);
ConnectivityProfile connectivity_profile(const Graph& g);

// Component index for each vertex, components numbered in order of their
// smallest vertex.
std::vector<int> component_labels(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool has_bipartite_component(const Graph& g);
bool is_regular(const Graph& g);
bool is_tree(const Graph& g);

// Minimum vertex cut size; K_n gives n-1, disconnected graphs give 0.
int vertex_connectivity(const Graph& g);
// Minimum edge cut size; n <= 1 and disconnected graphs give 0.
int edge_connectivity(const Graph& g);
std::optional<int> girth(const Graph& g);
std::optional<int> diameter(const Graph& g);

// Maximum of diameter(g[S]) over all vertex subsets S inducing a tree.
// Exhaustive over subsets; throws CapacityError above kMaxInducedTreeOrder.
inline constexpr int kMaxInducedTreeOrder = 24;
int max_induced_tree_diameter(const Graph& g);

// For a connected unicyclic graph: the largest diameter of the tree hanging
// off a cycle vertex (the component of that vertex once cycle edges are
// removed). Throws HypothesisError unless g is connected with m == n.
int max_cycle_branch_diameter(const Graph& g);

}  // namespace spreadlab

#endif  // SPREADLAB_STRUCTURE_HPP_
