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

#include "spreadlab/families.hpp"

#include <array>
#include <utility>
#include <vector>

#include "spreadlab/error.hpp"

namespace spreadlab {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kNames{{
    {Family::kEmpty, "empty"},
    {Family::kComplete, "complete"},
    {Family::kCycle, "cycle"},
    {Family::kPath, "path"},
    {Family::kStar, "star"},
    {Family::kCompleteBipartite, "complete_bipartite"},
    {Family::kJoinFamily, "join_family"},
    {Family::kTadpole, "tadpole"},
    {Family::kPetersen, "petersen"},
}};

constexpr std::size_t arity(Family f) {
  switch (f) {
    case Family::kPetersen:
      return 0;
    case Family::kCompleteBipartite:
    case Family::kTadpole:
      return 2;
    case Family::kJoinFamily:
      return 3;
    default:
      return 1;
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParameterError(msg);
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kNames) {
    if (fam == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [fam, n] : kNames) {
    if (n == name) return fam;
  }
  return std::nullopt;
}

Graph family(Family f, std::span<const int> p) {
  require(p.size() == arity(f), std::string(family_name(f)) + " takes " +
                                    std::to_string(arity(f)) + " parameter(s)");
  switch (f) {
    case Family::kEmpty:
      return empty_graph(p[0]);
    case Family::kComplete:
      return complete_graph(p[0]);
    case Family::kCycle:
      return cycle_graph(p[0]);
    case Family::kPath:
      return path_graph(p[0]);
    case Family::kStar:
      return star_graph(p[0]);
    case Family::kCompleteBipartite:
      return complete_bipartite(p[0], p[1]);
    case Family::kJoinFamily:
      return join_family(p[0], p[1], p[2]);
    case Family::kTadpole:
      return tadpole(p[0], p[1]);
    case Family::kPetersen:
      return petersen_graph();
  }
  throw ParameterError("unknown family");
}

Graph family(Family f, std::initializer_list<int> params) {
  return family(f, std::span<const int>(params.begin(), params.size()));
}

Graph empty_graph(int n) {
  require(n >= 0, "empty graph needs n >= 0");
  return Graph(n);
}

Graph complete_graph(int n) {
  require(n >= 0, "complete graph needs n >= 0");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  return complete_bipartite(1, leaves);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite needs a, b >= 1");
  return join(empty_graph(a), empty_graph(b));
}

Graph join_family(int n, int k, int i) {
  require(k >= 1 && i >= 1 && n - k - i >= 1,
          "join_family needs k >= 1, i >= 1 and n - k - i >= 1");
  return join(complete_graph(k),
              disjoint_union(complete_graph(i), complete_graph(n - k - i)));
}

Graph tadpole(int cycle_length, int tail_length) {
  require(cycle_length >= 3 && tail_length >= 0,
          "tadpole needs cycle length >= 3 and tail length >= 0");
  const int n = cycle_length + tail_length;
  std::vector<Edge> edges;
  for (int v = 0; v < cycle_length; ++v) edges.emplace_back(v, (v + 1) % cycle_length);
  for (int v = cycle_length - 1; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int v = 0; v < 5; ++v) {
    edges.emplace_back(v, (v + 1) % 5);          // outer cycle
    edges.emplace_back(v, v + 5);                // spokes
    edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
  }
  return Graph(10, edges);
}

}  // namespace spreadlab
