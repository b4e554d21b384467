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

#ifndef SPREADLAB_FAMILIES_HPP_
#define SPREADLAB_FAMILIES_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "spreadlab/graph.hpp"

namespace spreadlab {

enum class Family {
  kEmpty,              // (n): n isolated vertices
  kComplete,           // (n)
  kCycle,              // (n), n >= 3
  kPath,               // (n), n >= 1
  kStar,               // (k): K_{1,k}
  kCompleteBipartite,  // (a, b)
  kJoinFamily,         // (n, k, i): K_k ∨ (K_i ∪ K_{n-k-i})
  kTadpole,            // (g, h): C_g with a pendant path of h edges at vertex g-1
  kPetersen,           // ()
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// Builds the named graph; throws ParameterError on inconsistent parameters.
Graph family(Family f, std::span<const int> params);
Graph family(Family f, std::initializer_list<int> params);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);

// K_k ∨ (K_i ∪ K_{n-k-i}): a clique of size k joined to two disjoint
// cliques of sizes i and n-k-i. Vertices 0..k-1 are the joined clique,
// then the i-clique, then the rest. With i = 1 this is the extremal graph
// for the line-graph spread among graphs of vertex connectivity <= k.
Graph join_family(int n, int k, int i);

// C_g on vertices 0..g-1 plus the path (g-1) - g - ... - (g+h-1).
// tadpole(5, 4) is the unicyclic worked example (λ₁ ≈ 2.17, S ≈ 4.17).
Graph tadpole(int cycle_length, int tail_length);

Graph petersen_graph();

}  // namespace spreadlab

#endif  // SPREADLAB_FAMILIES_HPP_
