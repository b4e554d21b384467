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

#ifndef SPREADLAB_ANALYSIS_HPP_
#define SPREADLAB_ANALYSIS_HPP_

#include <optional>

#include "spreadlab/graph.hpp"
#include "spreadlab/spectra.hpp"
#include "spreadlab/structure.hpp"
#include "spreadlab/transforms.hpp"

namespace spreadlab {

struct TotalGraphSpectra {
  Spectrum adjacency;
  Spectrum laplacian;
  Spectrum signless;
};

// Lazily computed invariants of one graph. Each accessor computes on first
// use and caches; an Analysis is meant to live inside one task and is not
// safe to share across threads.
class Analysis {
 public:
  explicit Analysis(Graph g) : graph_(std::move(g)) {}

  const Graph& graph() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }
  int size() const noexcept { return graph_.size(); }

  const DegreeProfile& degrees();
  bool connected();
  bool bipartite();
  bool regular();
  int vertex_connectivity();
  int edge_connectivity();
  std::optional<int> girth();
  std::optional<int> diameter();

  const SpectralSummary& spectra();
  const LineGraph& line();
  const Graph& total();
  const TotalGraphSpectra& total_spectra();

 private:
  Graph graph_;
  std::optional<DegreeProfile> degrees_;
  std::optional<bool> connected_;
  std::optional<bool> bipartite_;
  std::optional<bool> regular_;
  std::optional<int> kappa_;
  std::optional<int> epsilon_;
  std::optional<std::optional<int>> girth_;
  std::optional<std::optional<int>> diameter_;
  std::optional<SpectralSummary> spectra_;
  std::optional<LineGraph> line_;
  std::optional<Graph> total_;
  std::optional<TotalGraphSpectra> total_spectra_;
};

}  // namespace spreadlab

#endif  // SPREADLAB_ANALYSIS_HPP_
