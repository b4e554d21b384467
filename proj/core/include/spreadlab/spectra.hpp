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

#ifndef SPREADLAB_SPECTRA_HPP_
#define SPREADLAB_SPECTRA_HPP_

#include <optional>
#include <vector>

#include "spreadlab/graph.hpp"
#include "spreadlab/matrix.hpp"

namespace spreadlab {

// Absolute tolerance for grouping eigenvalues (multiplicities, identities).
inline constexpr double kEigenTolerance = 1e-7;
// Slack tolerance for bound comparisons and tightness.
inline constexpr double kSlackTolerance = 1e-6;
inline constexpr int kMaxEigenOrder = 4096;

// Eigenvalues sorted nonincreasing. Index 0 is the largest (λ₁).
class Spectrum {
 public:
  Spectrum() = default;
  // Sorts `values` nonincreasing.
  explicit Spectrum(std::vector<double> values);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  double largest() const { return values_.front(); }
  double smallest() const { return values_.back(); }
  // largest - smallest, 0 for an empty spectrum.
  double spread() const;
  double sum() const;
  double sum_of_squares() const;
  int multiplicity(double value, double tol = kEigenTolerance) const;
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

// Largest index-wise |a_i - b_i|; throws InputError on size mismatch.
double max_abs_deviation(const Spectrum& a, const Spectrum& b);

// All eigenvalues of a symmetric matrix (Householder reduction to
// tridiagonal form, then implicit QL with Wilkinson-type shifts).
// Throws CapacityError above kMaxEigenOrder and NumericalError if an
// eigenvalue fails to converge.
Spectrum sym_eigenvalues(const SymMatrix& m);

Spectrum adjacency_spectrum(const Graph& g);
Spectrum laplacian_spectrum(const Graph& g);
Spectrum signless_spectrum(const Graph& g);

struct SpectralSummary {
  Spectrum adjacency;
  Spectrum laplacian;
  Spectrum signless;
  std::optional<Spectrum> line;  // adjacency spectrum of the line graph; absent when m = 0

  double spread = 0.0;             // λ₁ - λ_n
  double laplacian_spread = 0.0;   // μ₁ - μ_{n-1}; 0 when n <= 1
  double signless_spread = 0.0;    // q₁ - q_n
  std::optional<double> line_spread;  // λ₁(L(G)) - λ_m(L(G))
  double algebraic_connectivity = 0.0;  // μ_{n-1}; 0 when n <= 1
};

SpectralSummary spectral_summary(const Graph& g);
// Same, reusing an already built line graph of g.
SpectralSummary spectral_summary(const Graph& g, const Graph& line);

struct Lemma1Report {
  bool holds = false;
  double max_deviation = 0.0;  // over every compared pair
  int shared = 0;              // min(n, m) head entries compared
};

// q_i = λ_i(L(G)) + 2 for i <= min(n,m); λ_i(L(G)) = -2 beyond n when m > n;
// q_i = 0 beyond m when n > m. Tolerance 1e-7. Requires m >= 1.
Lemma1Report lemma1_check(const Graph& g);
Lemma1Report lemma1_check(const SpectralSummary& s);

}  // namespace spreadlab

#endif  // SPREADLAB_SPECTRA_HPP_
