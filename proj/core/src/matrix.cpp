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

#include "spreadlab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spreadlab/error.hpp"

namespace spreadlab {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix product dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix sum dimension mismatch");
  IntMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix difference dimension mismatch");
  IntMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
  return out;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

SymMatrix::SymMatrix(int order, std::vector<double> entries)
    : n_(order), data_(std::move(entries)) {
  if (order < 0 || data_.size() != static_cast<std::size_t>(order) * order) {
    throw InputError("symmetric matrix entry count does not match order");
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const double x = (*this)(i, j);
      if (!std::isfinite(x)) {
        throw InputError("non-finite matrix entry at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
      if (j > i && x != (*this)(j, i)) {
        throw InputError("matrix not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
    }
  }
}

SymMatrix::SymMatrix(const IntMatrix& m) {
  if (!m.is_symmetric()) throw InputError("integer matrix is not symmetric");
  n_ = m.rows();
  data_.resize(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) data_[static_cast<std::size_t>(i) * n_ + j] = static_cast<double>(m(i, j));
  }
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& diag) {
  const int n = static_cast<int>(diag.size());
  std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = diag[i];
  return SymMatrix(n, std::move(e));
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_squared() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return s;
}

double SymMatrix::max_abs_row_sum() const {
  double best = 0.0;
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

bool SymMatrix::is_integral() const {
  for (double x : data_) {
    if (x != std::round(x)) return false;
  }
  return true;
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order(), g.order());
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1;
    a(e.v, e.u) = 1;
  }
  return a;
}

IntMatrix degree_matrix(const Graph& g) {
  IntMatrix d(g.order(), g.order());
  for (int i = 0; i < g.order(); ++i) d(i, i) = g.degree(i);
  return d;
}

IntMatrix laplacian_matrix(const Graph& g) { return degree_matrix(g) - adjacency_matrix(g); }

IntMatrix signless_laplacian_matrix(const Graph& g) {
  return degree_matrix(g) + adjacency_matrix(g);
}

}  // namespace spreadlab
