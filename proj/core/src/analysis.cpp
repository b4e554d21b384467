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

#include "spreadlab/analysis.hpp"

namespace spreadlab {

const DegreeProfile& Analysis::degrees() {
  if (!degrees_) degrees_ = degree_profile(graph_);
  return *degrees_;
}

bool Analysis::connected() {
  if (!connected_) connected_ = is_connected(graph_);
  return *connected_;
}

bool Analysis::bipartite() {
  if (!bipartite_) bipartite_ = is_bipartite(graph_);
  return *bipartite_;
}

bool Analysis::regular() {
  if (!regular_) regular_ = is_regular(graph_);
  return *regular_;
}

int Analysis::vertex_connectivity() {
  if (!kappa_) kappa_ = spreadlab::vertex_connectivity(graph_);
  return *kappa_;
}

int Analysis::edge_connectivity() {
  if (!epsilon_) epsilon_ = spreadlab::edge_connectivity(graph_);
  return *epsilon_;
}

std::optional<int> Analysis::girth() {
  if (!girth_) girth_ = spreadlab::girth(graph_);
  return *girth_;
}

std::optional<int> Analysis::diameter() {
  if (!diameter_) diameter_ = spreadlab::diameter(graph_);
  return *diameter_;
}

const LineGraph& Analysis::line() {
  if (!line_) line_ = line_graph(graph_);
  return *line_;
}

const SpectralSummary& Analysis::spectra() {
  if (!spectra_) spectra_ = spectral_summary(graph_, line().graph);
  return *spectra_;
}

const Graph& Analysis::total() {
  if (!total_) total_ = total_graph(graph_);
  return *total_;
}

const TotalGraphSpectra& Analysis::total_spectra() {
  if (!total_spectra_) {
    const Graph& t = total();
    total_spectra_ = TotalGraphSpectra{adjacency_spectrum(t), laplacian_spectrum(t),
                                       signless_spectrum(t)};
  }
  return *total_spectra_;
}

}  // namespace spreadlab
