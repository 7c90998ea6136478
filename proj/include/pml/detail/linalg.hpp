// Copyright 2026 The PML Mechanisms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PML_DETAIL_LINALG_HPP_
#define PML_DETAIL_LINALG_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace pml::detail {

// Solves the square system A x = b by Gaussian elimination with partial
// pivoting. Returns nullopt when a pivot falls below pivot_tol (singular).
inline std::optional<std::vector<double>> solve_square(
    std::vector<std::vector<double>> a, std::vector<double> b,
    double pivot_tol = 1e-10) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < pivot_tol) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const double inv = 1.0 / a[col][col];
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] * inv;
      if (factor == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Orthonormal-free nullspace basis of the row set via row-echelon reduction:
// returns one basis vector per free column of the reduced system.
inline std::vector<std::vector<double>> nullspace_basis(
    std::vector<std::vector<double>> rows, std::size_t n,
    double rank_tol = 1e-10) {
  std::vector<int> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < rows.size(); ++col) {
    std::size_t pivot = row;
    for (std::size_t r = row + 1; r < rows.size(); ++r)
      if (std::abs(rows[r][col]) > std::abs(rows[pivot][col])) pivot = r;
    if (std::abs(rows[pivot][col]) < rank_tol) continue;
    std::swap(rows[pivot], rows[row]);
    const double inv = 1.0 / rows[row][col];
    for (std::size_t c = 0; c < n; ++c) rows[row][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == row) continue;
      const double factor = rows[r][col];
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) rows[r][c] -= factor * rows[row][c];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++row;
  }

  std::vector<bool> is_pivot(n, false);
  for (int col : pivot_col_of_row) is_pivot[static_cast<std::size_t>(col)] = true;

  std::vector<std::vector<double>> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<double> v(n, 0.0);
    v[free_col] = 1.0;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v[static_cast<std::size_t>(pivot_col_of_row[r])] = -rows[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace pml::detail

#endif  // PML_DETAIL_LINALG_HPP_
