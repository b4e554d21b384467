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

#ifndef SPREADLAB_IDENTITIES_HPP_
#define SPREADLAB_IDENTITIES_HPP_

#include "spreadlab/analysis.hpp"
#include "spreadlab/bounds.hpp"

namespace spreadlab {

// Structural facts checked on every graph of a sweep, in BoundReport form.
// Identity reports carry the observed deviation as actual_value and the
// allowed deviation as bound_value.

// q_i = λ_i(𝓛) + 2 with the tail rules; gated on m >= 1.
BoundReport lemma1_report(Analysis& a);
// |E(𝓛(G))| = Z_g/2 - m, exactly.
BoundReport theta_identity_report(Analysis& a);
// R Rᵗ = Q(G) and Rᵗ R = 2I + A(𝓛(G)), exactly. actual_value counts the
// failed identities.
BoundReport incidence_identity_report(Analysis& a);
// Total-graph degrees: 2 d(v) for vertex v, d_𝓛(e) + 2 for edge e; and
// δ(𝒯) = min(2δ, δ_𝓛 + 2), Δ(𝒯) = max(2Δ, Δ_𝓛 + 2).
BoundReport total_degree_report(Analysis& a);
// Quotient of A, L and Q of 𝒯(G) over the vertex/edge split interlaces the
// full spectra. Lower-bound form: actual_value is the smallest slack.
BoundReport quotient_interlacing_report(Analysis& a);
// Signless Laplacian interlacing under deletion of each edge.
BoundReport edge_interlacing_report(Analysis& a);

}  // namespace spreadlab

#endif  // SPREADLAB_IDENTITIES_HPP_
