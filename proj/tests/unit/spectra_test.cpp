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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "spreadlab/error.hpp"
#include "spreadlab/families.hpp"
#include "spreadlab/graph_io.hpp"
#include "spreadlab/harness.hpp"
#include "spreadlab/spectra.hpp"
#include "spreadlab/transforms.hpp"

namespace spreadlab {
namespace {

std::vector<double> eigen_oracle(const SymMatrix& m) {
  const int n = m.order();
  Eigen::MatrixXd dense(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) dense(i, j) = m(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.rbegin(), out.rend());
  return out;
}

void expect_matches_oracle(const SymMatrix& m, double tol) {
  const Spectrum s = sym_eigenvalues(m);
  const auto oracle = eigen_oracle(m);
  ASSERT_EQ(s.size(), static_cast<int>(oracle.size()));
  for (int i = 0; i < s.size(); ++i) ASSERT_NEAR(s[i], oracle[i], tol) << "index " << i;
}

TEST(Eigensolver, RandomSymmetricMatchesEigen) {
  std::mt19937 rng(20260418);
  std::normal_distribution<double> dist(0.0, 3.0);
  for (int n : {1, 2, 3, 5, 8, 13, 40, 97}) {
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) a[i * n + j] = a[j * n + i] = dist(rng);
    }
    expect_matches_oracle(SymMatrix(n, a), 1e-9 * n);
  }
}

TEST(Eigensolver, GraphMatricesMatchEigen) {
  for (int n = 2; n <= 5; ++n) {
    for_each_graph(n, true, [](const Graph& g) {
      expect_matches_oracle(SymMatrix(adjacency_matrix(g)), 1e-10);
      expect_matches_oracle(SymMatrix(laplacian_matrix(g)), 1e-10);
      expect_matches_oracle(SymMatrix(signless_laplacian_matrix(g)), 1e-10);
    });
  }
  expect_matches_oracle(SymMatrix(adjacency_matrix(total_graph(petersen_graph()))), 1e-10);
}

TEST(Eigensolver, EdgeCases) {
  EXPECT_TRUE(sym_eigenvalues(SymMatrix(0, {})).empty());
  const Spectrum d = sym_eigenvalues(SymMatrix::diagonal({1.0, -4.0, 2.5}));
  EXPECT_DOUBLE_EQ(d[0], 2.5);
  EXPECT_DOUBLE_EQ(d[2], -4.0);
  // repeated eigenvalues
  const Spectrum k = adjacency_spectrum(complete_graph(30));
  EXPECT_NEAR(k.largest(), 29.0, 1e-10);
  EXPECT_EQ(k.multiplicity(-1.0), 29);
}

TEST(Eigensolver, CapacityGuard) {
  EXPECT_THROW(sym_eigenvalues(SymMatrix::diagonal(std::vector<double>(kMaxEigenOrder + 1, 1.0))),
               CapacityError);
}

TEST(Spectra, KnownSpectra) {
  const Spectrum k4 = adjacency_spectrum(complete_graph(4));
  EXPECT_NEAR(k4.largest(), 3.0, 1e-12);
  EXPECT_NEAR(k4.smallest(), -1.0, 1e-12);
  EXPECT_NEAR(k4.spread(), 4.0, 1e-12);
  const Spectrum c5 = adjacency_spectrum(cycle_graph(5));
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  EXPECT_NEAR(c5.smallest(), -golden, 1e-12);
  const Spectrum pet = adjacency_spectrum(petersen_graph());
  EXPECT_EQ(pet.multiplicity(1.0), 5);
  EXPECT_EQ(pet.multiplicity(-2.0), 4);
  EXPECT_NEAR(pet.sum(), 0.0, 1e-10);
  EXPECT_NEAR(pet.sum_of_squares(), 30.0, 1e-10);
  const Spectrum lap = laplacian_spectrum(star_graph(3));
  EXPECT_NEAR(lap.largest(), 4.0, 1e-12);
  EXPECT_NEAR(lap.smallest(), 0.0, 1e-12);
}

TEST(Spectra, Summary) {
  const SpectralSummary k4 = spectral_summary(complete_graph(4));
  EXPECT_NEAR(k4.spread, 4.0, 1e-12);
  ASSERT_TRUE(k4.line_spread.has_value());
  EXPECT_NEAR(*k4.line_spread, 6.0, 1e-12);
  EXPECT_NEAR(k4.algebraic_connectivity, 4.0, 1e-12);
  EXPECT_NEAR(k4.laplacian_spread, 0.0, 1e-12);
  const SpectralSummary empty = spectral_summary(empty_graph(3));
  EXPECT_EQ(empty.spread, 0.0);
  EXPECT_FALSE(empty.line_spread.has_value());
  EXPECT_FALSE(empty.line.has_value());
}

TEST(Spectra, WorkedExampleValues) {
  const SpectralSummary s = spectral_summary(tadpole(5, 4));
  // reference values from numpy.linalg.eigvalsh
  EXPECT_NEAR(s.adjacency.largest(), 2.170086487, 1e-8);
  EXPECT_NEAR(s.adjacency.smallest(), -2.0, 1e-10);
  EXPECT_NEAR(s.spread, 4.170086487, 1e-8);
  EXPECT_NEAR(s.signless_spread, 4.469367923, 1e-8);
  EXPECT_NEAR(*s.line_spread, 4.469367923, 1e-8);
}

TEST(SignlessLineShift, ShiftedSignlessSpectrum) {
  const Lemma1Report k4 = lemma1_check(complete_graph(4));
  EXPECT_TRUE(k4.holds);
  EXPECT_EQ(k4.shared, 4);
  EXPECT_LT(k4.max_deviation, 1e-10);
  // m < n: the line spectrum is the shifted head of Q
  const Lemma1Report tree = lemma1_check(star_graph(4));
  EXPECT_TRUE(tree.holds);
  EXPECT_EQ(tree.shared, 4);
  EXPECT_THROW(lemma1_check(empty_graph(3)), InputError);
}

TEST(SignlessLineShift, AllConnectedGraphsUpToFive) {
  for (int n = 2; n <= 5; ++n) {
    for_each_graph(n, true, [](const Graph& g) {
      const Lemma1Report r = lemma1_check(g);
      ASSERT_TRUE(r.holds) << to_graph6(g);
      ASSERT_LT(r.max_deviation, 1e-7);
    });
  }
}

}  // namespace
}  // namespace spreadlab
