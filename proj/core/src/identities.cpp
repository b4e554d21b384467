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

#include "spreadlab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spreadlab/matrix.hpp"
#include "spreadlab/quotient.hpp"
#include "spreadlab/transforms.hpp"

namespace spreadlab {
namespace {

BoundReport identity(BoundId id, double tolerance) {
  BoundReport r;
  r.id = id;
  r.kind = BoundKind::kIdentity;
  r.bound_value = tolerance;
  return r;
}

void settle(BoundReport& r) {
  r.slack = r.kind == BoundKind::kLower ? r.actual_value - r.bound_value
                                        : r.bound_value - r.actual_value;
  r.tight = false;
}

}  // namespace

BoundReport lemma1_report(Analysis& a) {
  BoundReport r = identity(BoundId::kLemma1, kEigenTolerance);
  if (a.size() == 0) {
    r.notes = "no edges";
    settle(r);
    return r;
  }
  r.hypothesis_met = true;
  const Lemma1Report rep = lemma1_check(a.spectra());
  r.actual_value = rep.max_deviation;
  r.consistent = rep.holds;
  r.extras = {{"shared", static_cast<double>(rep.shared)}};
  settle(r);
  return r;
}

BoundReport theta_identity_report(Analysis& a) {
  BoundReport r = identity(BoundId::kThetaIdentity, 0.0);
  r.hypothesis_met = true;
  const long long z = a.degrees().zagreb;
  const long long theta = z / 2 - a.size();
  const long long line_edges = a.line().graph.size();
  r.actual_value = static_cast<double>(std::llabs(line_edges - theta));
  r.consistent = z % 2 == 0 && line_edges == theta;
  r.extras = {{"theta", static_cast<double>(theta)},
              {"line_edges", static_cast<double>(line_edges)}};
  settle(r);
  return r;
}

BoundReport incidence_identity_report(Analysis& a) {
  BoundReport r = identity(BoundId::kIncidenceIdentity, 0.0);
  r.hypothesis_met = true;
  const Graph& g = a.graph();
  const IntMatrix inc = incidence_matrix(g);
  const IntMatrix inc_t = inc.transpose();
  int failures = 0;
  if (!(inc * inc_t == signless_laplacian_matrix(g))) ++failures;
  const IntMatrix expected =
      IntMatrix::identity(g.size()) + IntMatrix::identity(g.size()) + adjacency_matrix(a.line().graph);
  if (!(inc_t * inc == expected)) ++failures;
  r.actual_value = failures;
  r.consistent = failures == 0;
  settle(r);
  return r;
}

BoundReport total_degree_report(Analysis& a) {
  BoundReport r = identity(BoundId::kTotalDegreeIdentity, 0.0);
  r.hypothesis_met = true;
  const Graph& g = a.graph();
  const Graph& line = a.line().graph;
  const Graph& total = a.total();
  const int n = g.order();
  int failures = 0;
  int min_expected = std::numeric_limits<int>::max();
  int max_expected = 0;
  for (int v = 0; v < n; ++v) {
    const int expected = 2 * g.degree(v);
    if (total.degree(v) != expected) ++failures;
    min_expected = std::min(min_expected, expected);
    max_expected = std::max(max_expected, expected);
  }
  for (int e = 0; e < line.order(); ++e) {
    const int expected = line.degree(e) + 2;
    if (total.degree(n + e) != expected) ++failures;
    min_expected = std::min(min_expected, expected);
    max_expected = std::max(max_expected, expected);
  }
  if (total.order() > 0) {
    const DegreeProfile p = degree_profile(total);
    if (p.min_degree != min_expected || p.max_degree != max_expected) ++failures;
  }
  r.actual_value = failures;
  r.consistent = failures == 0;
  settle(r);
  return r;
}

BoundReport quotient_interlacing_report(Analysis& a) {
  BoundReport r;
  r.id = BoundId::kQuotientInterlacing;
  r.kind = BoundKind::kLower;
  if (a.size() == 0 || a.order() == 0) {
    r.notes = "needs both blocks nonempty";
    settle(r);
    return r;
  }
  r.hypothesis_met = true;
  const Graph& total = a.total();
  const Partition p = vertex_edge_partition(a.order(), a.size());
  const auto& spectra = a.total_spectra();
  const std::pair<IntMatrix, const Spectrum*> cases[] = {
      {adjacency_matrix(total), &spectra.adjacency},
      {laplacian_matrix(total), &spectra.laplacian},
      {signless_laplacian_matrix(total), &spectra.signless},
  };
  const char* labels[] = {"slack_adjacency", "slack_laplacian", "slack_signless"};
  double worst = std::numeric_limits<double>::infinity();
  bool holds = true;
  for (int c = 0; c < 3; ++c) {
    const QuotientMatrix q = quotient_matrix(SymMatrix(cases[c].first), p);
    const InterlacingReport rep = interlacing_check(quotient_eigenvalues(q), *cases[c].second);
    holds = holds && rep.holds;
    worst = std::min(worst, rep.min_slack);
    r.extras.emplace_back(labels[c], rep.min_slack);
  }
  r.actual_value = worst;
  r.consistent = holds;
  settle(r);
  return r;
}

BoundReport edge_interlacing_report(Analysis& a) {
  BoundReport r;
  r.id = BoundId::kEdgeInterlacing;
  r.kind = BoundKind::kLower;
  const Graph& g = a.graph();
  if (g.size() == 0) {
    r.notes = "no edges";
    settle(r);
    return r;
  }
  r.hypothesis_met = true;
  double worst = std::numeric_limits<double>::infinity();
  bool holds = true;
  for (const Edge& e : g.edges()) {
    const InterlacingReport rep = edge_interlacing_check(g, e);
    holds = holds && rep.holds;
    worst = std::min(worst, rep.min_slack);
  }
  r.actual_value = worst;
  r.consistent = holds;
  settle(r);
  return r;
}

}  // namespace spreadlab
