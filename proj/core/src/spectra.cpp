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

#include "spreadlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "spreadlab/error.hpp"
#include "spreadlab/transforms.hpp"

namespace spreadlab {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::spread() const { return empty() ? 0.0 : largest() - smallest(); }

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

double Spectrum::sum_of_squares() const {
  double s = 0.0;
  for (double x : values_) s += x * x;
  return s;
}

int Spectrum::multiplicity(double value, double tol) const {
  return static_cast<int>(std::count_if(values_.begin(), values_.end(),
                                        [&](double x) { return std::abs(x - value) <= tol; }));
}

double max_abs_deviation(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) throw InputError("spectra differ in size");
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

Spectrum adjacency_spectrum(const Graph& g) {
  return sym_eigenvalues(SymMatrix(adjacency_matrix(g)));
}

Spectrum laplacian_spectrum(const Graph& g) {
  return sym_eigenvalues(SymMatrix(laplacian_matrix(g)));
}

Spectrum signless_spectrum(const Graph& g) {
  return sym_eigenvalues(SymMatrix(signless_laplacian_matrix(g)));
}

SpectralSummary spectral_summary(const Graph& g) {
  return spectral_summary(g, line_graph(g).graph);
}

SpectralSummary spectral_summary(const Graph& g, const Graph& line) {
  if (line.order() != g.size()) throw InputError("line graph order must equal edge count");
  SpectralSummary s;
  s.adjacency = adjacency_spectrum(g);
  s.laplacian = laplacian_spectrum(g);
  s.signless = signless_spectrum(g);
  s.spread = s.adjacency.spread();
  s.signless_spread = s.signless.spread();
  const int n = g.order();
  if (n >= 2) {
    s.algebraic_connectivity = s.laplacian[n - 2];
    s.laplacian_spread = s.laplacian[0] - s.laplacian[n - 2];
  }
  if (g.size() >= 1) {
    s.line = adjacency_spectrum(line);
    s.line_spread = s.line->spread();
  }
  return s;
}

Lemma1Report lemma1_check(const SpectralSummary& s) {
  if (!s.line) throw InputError("signless-line shift identity needs at least one edge");
  const Spectrum& q = s.signless;
  const Spectrum& l = *s.line;
  const int n = q.size();
  const int m = l.size();
  Lemma1Report r;
  r.shared = std::min(n, m);
  for (int i = 0; i < r.shared; ++i) {
    r.max_deviation = std::max(r.max_deviation, std::abs(q[i] - (l[i] + 2.0)));
  }
  for (int i = n; i < m; ++i) r.max_deviation = std::max(r.max_deviation, std::abs(l[i] + 2.0));
  for (int i = m; i < n; ++i) r.max_deviation = std::max(r.max_deviation, std::abs(q[i]));
  r.holds = r.max_deviation <= kEigenTolerance;
  return r;
}

Lemma1Report lemma1_check(const Graph& g) {
  if (g.size() == 0) throw InputError("signless-line shift identity needs at least one edge");
  return lemma1_check(spectral_summary(g));
}

}  // namespace spreadlab
