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

#ifndef SPREADLAB_BOUNDS_HPP_
#define SPREADLAB_BOUNDS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spreadlab/analysis.hpp"
#include "spreadlab/graph.hpp"
#include "spreadlab/spectra.hpp"

namespace spreadlab {

enum class BoundId {
  kGregoryUpper,
  kLineSpreadUpper,
  kCharactTrichotomy,
  kSpreadVsLineSpread,
  kUnicyclicTheorem,
  kGroneTreeBound,
  kEdgeAdditionMonotonicity,
  kConnectivityVertex,
  kConnectivityEdge,
  kConnectivityMinDegree,
  kTotalQSpreadLower,
  kTotalSpreadLower,
  kTotalLaplacianSpreadLower,
  kRegularTotalSpread,
  kRegularTotalMinEig,
  // Structural identities and interlacing facts, reported in the same shape.
  kLemma1,
  kThetaIdentity,
  kIncidenceIdentity,
  kTotalDegreeIdentity,
  kQuotientInterlacing,
  kEdgeInterlacing,
  kTwoLambdaQ,
};

inline constexpr int kBoundIdCount = static_cast<int>(BoundId::kTwoLambdaQ) + 1;

std::string_view bound_name(BoundId id);
std::optional<BoundId> parse_bound(std::string_view name);
std::vector<BoundId> all_bounds();
// True for checks that construct the total graph (order n + m).
bool uses_total_graph(BoundId id);

enum class BoundKind {
  kUpper,     // actual <= bound
  kLower,     // actual >= bound
  kIdentity,  // actual is a deviation that must stay within bound (a tolerance)
};

// One result evaluated on one graph.
struct BoundReport {
  BoundId id = BoundId::kGregoryUpper;
  BoundKind kind = BoundKind::kUpper;
  bool hypothesis_met = false;
  double bound_value = 0.0;
  double actual_value = 0.0;
  // bound - actual for upper bounds and identities, actual - bound for lower.
  double slack = 0.0;
  bool tight = false;
  // Structural prediction of equality, where an iff is stated.
  std::optional<bool> equality_predicted;
  // Side conditions asserted alongside the main inequality (e.g. the
  // trichotomy's exact identities). false counts as a violation.
  bool consistent = true;
  // Record-only results never count as violations.
  bool enforced = true;
  std::string notes;
  std::vector<std::pair<std::string, double>> extras;

  // tolerance applies to upper and lower bounds; identities allow none.
  bool violation(double tolerance = kSlackTolerance) const;
  bool iff_mismatch() const;
  std::optional<double> extra(std::string_view key) const;
};

// Spread S(G) <= λ₁ + sqrt(2m - λ₁²) <= 2 sqrt(m); equality iff m = 0 or
// the non-isolated part is complete bipartite.
BoundReport gregory_upper(Analysis& a);
BoundReport gregory_upper(const Graph& g);

// Line-graph spread S_𝓛 <= q₁ - 2 + sqrt(Z_g - 2m - (q₁-2)²) <= 2 sqrt(Z_g/2 - m).
BoundReport line_spread_upper(Analysis& a);
BoundReport line_spread_upper(const Graph& g);

// m = n: S_𝓛 = S_Q.  m > n: S_𝓛 = q₁ >= S_Q, equality iff some component is
// bipartite.  m < n: S_𝓛 = q₁ - q_m <= q₁ = S_Q.
BoundReport charact_trichotomy(Analysis& a);
BoundReport charact_trichotomy(const Graph& g);

// Connected, m > n >= 4: S(G) <= S_𝓛(G), equality iff regular bipartite.
BoundReport spread_vs_line_spread(Analysis& a);
BoundReport spread_vs_line_spread(const Graph& g);

// Connected unicyclic, odd girth g, h = max cycle-branch diameter,
// D₀ = (g+1)/2 + h. If λ_n >= 1 - cos(π/(D₀+1)) - λ₁ then S <= S_𝓛 = S_Q.
BoundReport unicyclic_theorem(Analysis& a);
BoundReport unicyclic_theorem(const Graph& g);

// Trees: a(T) <= 1 - cos(π/(diam+1)), and a(T) <= 0.49 for n >= 6, as
// stated in the literature this builds on. Record-only: both fail on small
// trees (a(P₄) = 2 - √2 > 1 - cos(π/4)); outcomes are reported, not enforced.
BoundReport grone_tree_bound(Analysis& a);
BoundReport grone_tree_bound(const Graph& g);

// Connected G, non-edge e: q₁, λ₁(𝓛) and S_𝓛 all strictly increase.
// Throws InputError if e is already an edge.
BoundReport edge_addition_monotonicity(Analysis& a, Edge e);
BoundReport edge_addition_monotonicity(const Graph& g, Edge e);

enum class ConnectivityClass { kVertex, kEdge, kMinDegree };

// S_𝓛(G) <= n - 2 + k/2 + ½ sqrt((2n-k)² + 16(k-n+1)) over connected graphs
// with κ (resp. ε, δ) <= k; equality iff G ≅ K_k ∨ (K_1 ∪ K_{n-k-1}).
// The closed form is the line spread of join_family(n, k, 1).
// Throws ParameterError unless 1 <= k <= n-1.
BoundReport connectivity_spread_bound(Analysis& a, int k, ConnectivityClass cls);
BoundReport connectivity_spread_bound(const Graph& g, int k, ConnectivityClass cls);
double connectivity_bound_value(int n, int k);
// True iff g ≅ K_k ∨ (K_1 ∪ K_{n-k-1}): the complement is a star with
// n-k-1 edges plus isolated vertices.
bool is_connectivity_extremal(const Graph& g, int k);

// S_Q(𝒯(G)) >= 2 sqrt((3m/n - Z_g/m)² + 10m/n - 2Z_g/m + 1), G connected.
BoundReport total_q_spread_lower(Analysis& a);
BoundReport total_q_spread_lower(const Graph& g);

// S(𝒯(G)) >= sqrt(ψ² - 8(Z_g - 4m)/n), ψ = (2m² + n(Z_g - 2m))/(mn).
BoundReport total_spread_lower(Analysis& a);
BoundReport total_spread_lower(const Graph& g);

// S_L(𝒯(G)) >= |(2m + 2n)/n - 2δ|, G connected, 𝒯(G) not complete.
BoundReport total_laplacian_spread_lower(Analysis& a);
BoundReport total_laplacian_spread_lower(const Graph& g);

// Closed-form line spectrum of K_k ∨ (K_i ∪ K_{n-k-i}):
// n + k/2 - 4 ± ½ sqrt((2n-k)² + 16i(k-n+i)) once each, n-4 (×k),
// k+i-4 (×(i-1)), n-i-4 (×(n-k-i-1)), -2 (×(m-n)).
// Throws ParameterError outside k, i >= 1, n-k-i >= 1, or when m < n.
Spectrum join_family_line_spectrum(int n, int k, int i);
// n - 2 + k/2 + ½ sqrt((2n-k)² + 16i(k-n+i)); requires m > n.
double join_family_line_spread(int n, int k, int i);
int join_family_edge_count(int n, int k, int i);

// Total-graph spectrum of a connected r-regular graph (r >= 2):
// (2λ + r - 2 ± sqrt(4λ + r² + 4))/2 per adjacency eigenvalue λ, plus -2
// with multiplicity n(r-2)/2. Throws HypothesisError otherwise.
Spectrum regular_total_spectrum(const Graph& g);
// sqrt(4λ + r² + 4); radicands within rounding noise of zero give 0.
double total_radical(double lambda, int r);
Spectrum regular_total_spectrum(const Spectrum& adjacency, int r);

struct MinEigReport {
  double value = 0.0;           // (2λ_n + r - 2 - sqrt(4λ_n + r² + 4))/2
  bool hypothesis_met = false;  // r >= 3
  bool is_spectrum_minimum = false;
  bool at_most_minus_two = false;
};

// Throws HypothesisError for non-regular or disconnected input.
MinEigReport regular_total_min_eig(const Graph& g);
BoundReport regular_total_min_eig_report(Analysis& a);

// Exact S(𝒯(G)) = (2S + r + 2 + sqrt(4λ_n + r² + 4))/2 for connected
// r-regular G, r >= 2, bracketed by (2S + λ_n + 2 + sqrt(...))/2 and
// S + sqrt(...) - λ_n. The report's bound is the upper bracket; the exact
// value and the lower bracket are asserted through `consistent`.
BoundReport regular_total_spread(Analysis& a);
BoundReport regular_total_spread(const Graph& g);

// 2λ₁ <= q₁ for connected graphs, equality iff regular.
BoundReport two_lambda_q(Analysis& a);

}  // namespace spreadlab

#endif  // SPREADLAB_BOUNDS_HPP_
