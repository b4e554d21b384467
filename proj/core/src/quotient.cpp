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

#include "spreadlab/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spreadlab/error.hpp"

namespace spreadlab {
namespace {

constexpr double kRowSumTolerance = 1e-9;

}  // namespace

void Partition::validate(int order) const {
  std::vector<int> seen(order, 0);
  for (const auto& block : blocks) {
    if (block.empty()) throw InputError("partition has an empty block");
    for (int v : block) {
      if (v < 0 || v >= order) {
        throw InputError("partition index " + std::to_string(v) + " out of range");
      }
      if (seen[v]++) throw InputError("index " + std::to_string(v) + " in two blocks");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw InputError("partition does not cover every index");
  }
}

Partition vertex_edge_partition(int n, int m) {
  Partition p;
  std::vector<int> vertices(n);
  std::vector<int> edges(m);
  for (int i = 0; i < n; ++i) vertices[i] = i;
  for (int j = 0; j < m; ++j) edges[j] = n + j;
  if (n > 0) p.blocks.push_back(std::move(vertices));
  if (m > 0) p.blocks.push_back(std::move(edges));
  return p;
}

QuotientMatrix quotient_matrix(const SymMatrix& m, const Partition& p) {
  p.validate(m.order());
  const int k = p.block_count();
  const bool exact = m.is_integral();
  QuotientMatrix q;
  q.k = k;
  q.source_order = m.order();
  q.entries.assign(static_cast<std::size_t>(k) * k, 0.0);
  q.equitable = true;
  for (int i = 0; i < k; ++i) q.block_sizes.push_back(static_cast<int>(p.blocks[i].size()));

  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      double total = 0.0;
      double first_row = 0.0;
      bool first = true;
      for (int r : p.blocks[i]) {
        double row = 0.0;
        for (int c : p.blocks[j]) row += m(r, c);
        total += row;
        if (first) {
          first_row = row;
          first = false;
        } else if (exact ? row != first_row : std::abs(row - first_row) > kRowSumTolerance) {
          q.equitable = false;
        }
      }
      q.entries[static_cast<std::size_t>(i) * k + j] = total / q.block_sizes[i];
    }
  }
  return q;
}

Spectrum quotient_eigenvalues(const QuotientMatrix& q) {
  std::vector<double> sym(static_cast<std::size_t>(q.k) * q.k, 0.0);
  for (int i = 0; i < q.k; ++i) {
    for (int j = i; j < q.k; ++j) {
      // n_i m_ij and n_j m_ji are both the block sum; average them.
      const double block_sum = 0.5 * (q(i, j) * q.block_sizes[i] + q(j, i) * q.block_sizes[j]);
      const double v = block_sum / std::sqrt(static_cast<double>(q.block_sizes[i]) * q.block_sizes[j]);
      sym[static_cast<std::size_t>(i) * q.k + j] = v;
      sym[static_cast<std::size_t>(j) * q.k + i] = v;
    }
  }
  return sym_eigenvalues(SymMatrix(q.k, std::move(sym)));
}

InterlacingReport interlacing_check(const Spectrum& quotient_eigs, const Spectrum& full_eigs) {
  const int k = quotient_eigs.size();
  const int n = full_eigs.size();
  if (k > n) throw InputError("quotient larger than full matrix");
  InterlacingReport r;
  r.min_slack = k == 0 ? 0.0 : full_eigs[0] - quotient_eigs[0];
  for (int i = 0; i < k; ++i) {
    r.min_slack = std::min(r.min_slack, full_eigs[i] - quotient_eigs[i]);
    r.min_slack = std::min(r.min_slack, quotient_eigs[i] - full_eigs[n - k + i]);
  }
  r.holds = r.min_slack >= -kEigenTolerance;
  return r;
}

InterlacingReport edge_interlacing_check(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw InputError("edge interlacing needs an edge of the graph");
  const Spectrum q = signless_spectrum(g);
  const Spectrum s = signless_spectrum(g.without_edge(e));
  const int n = q.size();
  InterlacingReport r;
  r.min_slack = s[n - 1];
  for (int i = 0; i < n; ++i) r.min_slack = std::min(r.min_slack, q[i] - s[i]);
  for (int i = 0; i + 1 < n; ++i) r.min_slack = std::min(r.min_slack, s[i] - q[i + 1]);
  r.holds = r.min_slack >= -kEigenTolerance;
  return r;
}

}  // namespace spreadlab
