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

#ifndef SPREADLAB_MATRIX_HPP_
#define SPREADLAB_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spreadlab/graph.hpp"

namespace spreadlab {

// Dense row-major integer matrix. Graph matrices are assembled here so the
// structural identities (R Rᵗ = Q and friends) can be checked exactly.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  std::int64_t& operator()(int i, int j) { return data_[index(i, j)]; }
  std::int64_t operator()(int i, int j) const { return data_[index(i, j)]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Dense symmetric real matrix. Construction rejects asymmetric or
// non-finite input (InputError).
class SymMatrix {
 public:
  SymMatrix() = default;
  SymMatrix(int order, std::vector<double> entries);
  explicit SymMatrix(const IntMatrix& m);

  static SymMatrix diagonal(const std::vector<double>& diag);

  int order() const noexcept { return n_; }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<double>& data() const noexcept { return data_; }

  double trace() const;
  double frobenius_squared() const;
  double max_abs_row_sum() const;
  // True when every entry is an exact integer.
  bool is_integral() const;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix degree_matrix(const Graph& g);
IntMatrix laplacian_matrix(const Graph& g);         // D - A
IntMatrix signless_laplacian_matrix(const Graph& g);  // D + A

}  // namespace spreadlab

#endif  // SPREADLAB_MATRIX_HPP_
