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

#ifndef SPREADLAB_QUOTIENT_HPP_
#define SPREADLAB_QUOTIENT_HPP_

#include <vector>

#include "spreadlab/graph.hpp"
#include "spreadlab/matrix.hpp"
#include "spreadlab/spectra.hpp"

namespace spreadlab {

// Disjoint nonempty index blocks covering 0..order-1.
struct Partition {
  std::vector<std::vector<int>> blocks;

  int block_count() const noexcept { return static_cast<int>(blocks.size()); }
  // Throws InputError unless the blocks partition 0..order-1.
  void validate(int order) const;
};

// {0..n-1}, {n..n+m-1}: the vertex/edge split of a total graph.
Partition vertex_edge_partition(int n, int m);

// m_ij = (1/n_i) * (sum of block (i,j)). Stored row-major, k × k.
struct QuotientMatrix {
  int k = 0;
  int source_order = 0;
  std::vector<int> block_sizes;
  std::vector<double> entries;
  // Every block has constant row sums (exact for integral matrices,
  // tolerance 1e-9 otherwise).
  bool equitable = false;

  double operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * k + j];
  }
};

QuotientMatrix quotient_matrix(const SymMatrix& m, const Partition& p);

// The quotient is similar to the symmetric matrix S_ij / sqrt(n_i n_j)
// (S = block sums), so its eigenvalues are real; computed through that form.
Spectrum quotient_eigenvalues(const QuotientMatrix& q);

struct InterlacingReport {
  bool holds = false;
  // Smallest of full[i] - quot[i] and quot[i] - full[n-k+i]; negative means
  // a failed inequality.
  double min_slack = 0.0;
};

// full[i] >= quotient[i] >= full[n-k+i] for every i, with tolerance 1e-7.
InterlacingReport interlacing_check(const Spectrum& quotient_eigs, const Spectrum& full_eigs);

// Signless Laplacian eigenvalues s of G-e against q of G:
// 0 <= s_n <= q_n <= s_{n-1} <= ... <= s_1 <= q_1. Throws InputError if e is
// not an edge of g.
InterlacingReport edge_interlacing_check(const Graph& g, Edge e);

}  // namespace spreadlab

#endif  // SPREADLAB_QUOTIENT_HPP_
