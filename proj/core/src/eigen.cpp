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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spreadlab/error.hpp"
#include "spreadlab/spectra.hpp"

namespace spreadlab {
namespace {

constexpr int kMaxQlIterations = 60;

// Householder reduction of a symmetric matrix (row-major, order n) to
// tridiagonal form. On return `diag` holds the diagonal and `off[i]` the
// (i, i+1) entry, off[n-1] = 0.
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& diag,
                    std::vector<double>& off) {
  const auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  std::vector<double> e(n, 0.0);
  for (int i = n - 1; i > 0; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
  }
  diag.resize(n);
  off.assign(n, 0.0);
  for (int i = 0; i < n; ++i) diag[i] = at(i, i);
  for (int i = 1; i < n; ++i) off[i - 1] = e[i];
}

double offdiag_norm(const std::vector<double>& off) {
  double s = 0.0;
  for (double x : off) s += x * x;
  return std::sqrt(s);
}

// Implicit QL on a symmetric tridiagonal matrix; eigenvalues land in `d`.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iterations = 0;
    while (true) {
      int m = l;
      for (; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iterations > kMaxQlIterations) {
        throw NumericalError("QL iteration did not converge for eigenvalue " +
                                 std::to_string(l) + "; off-diagonal norm " +
                                 std::to_string(offdiag_norm(e)),
                             offdiag_norm(e));
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
}

}  // namespace

Spectrum sym_eigenvalues(const SymMatrix& m) {
  const int n = m.order();
  if (n > kMaxEigenOrder) {
    throw CapacityError("matrix order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxEigenOrder));
  }
  if (n == 0) return Spectrum{};
  std::vector<double> work = m.data();
  std::vector<double> diag;
  std::vector<double> off;
  tridiagonalize(work, n, diag, off);
  tridiagonal_ql(diag, off);
  return Spectrum(std::move(diag));
}

}  // namespace spreadlab
