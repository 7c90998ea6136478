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

#include "pml/detail/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pml/core.hpp"

namespace pml::detail {

namespace {

constexpr double kPivotTol = 1e-10;
constexpr double kReducedCostTol = 1e-9;
constexpr double kPhaseOneTol = 1e-7;

// Dense tableau over columns [structural | artificial | rhs]. Rows are kept
// reduced so that each basic column is a unit vector.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<double>>& eq_rows,
          const std::vector<double>& rhs, std::size_t n_structural)
      : m_(eq_rows.size()), n_(n_structural), width_(n_structural + eq_rows.size() + 1) {
    rows_.assign(m_, std::vector<double>(width_, 0.0));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = eq_rows[i][j];
      rows_[i][n_ + i] = 1.0;
      rows_[i][width_ - 1] = rhs[i];
      basis_[i] = n_ + i;  // artificial
    }
  }

  // Bland's rule: enter the smallest eligible index, leave by minimum ratio
  // with ties resolved to the smallest basis variable. Returns false at
  // optimality for the given costs (restricted to columns < limit).
  bool pivot_step(const std::vector<double>& costs, std::size_t limit) {
    std::size_t entering = limit;
    for (std::size_t j = 0; j < limit; ++j) {
      if (is_basic(j)) continue;
      if (reduced_cost(costs, j) > kReducedCostTol) {
        entering = j;
        break;
      }
    }
    if (entering == limit) return false;

    std::size_t leaving = m_;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m_; ++i) {
      const double coef = rows_[i][entering];
      if (coef <= kPivotTol) continue;
      const double ratio = rhs_of(i) / coef;
      if (ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 &&
           (leaving == m_ || basis_[i] < basis_[leaving]))) {
        best_ratio = ratio;
        leaving = i;
      }
    }
    if (leaving == m_) fail(errc::unbounded, "ray of unbounded improvement");
    pivot(leaving, entering);
    return true;
  }

  void pivot(std::size_t row, std::size_t col) {
    const double inv = 1.0 / rows_[row][col];
    for (double& v : rows_[row]) v *= inv;
    rows_[row][col] = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double factor = rows_[i][col];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) rows_[i][j] -= factor * rows_[row][j];
      rows_[i][col] = 0.0;
    }
    basis_[row] = col;
  }

  double reduced_cost(const std::vector<double>& costs, std::size_t j) const {
    double value = costs[j];
    for (std::size_t i = 0; i < m_; ++i)
      value -= costs[basis_[i]] * rows_[i][j];
    return value;
  }

  bool is_basic(std::size_t j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  // Pivots basic artificials onto structural columns where possible and
  // deletes rows that reduced to 0 = 0 (redundant constraints).
  void drop_artificials() {
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (std::abs(rows_[i][j]) > kPivotTol) {
          col = j;
          break;
        }
      if (col < n_) {
        pivot(i, col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
      }
    }
  }

  std::size_t row_count() const { return m_; }
  std::size_t basis_var(std::size_t i) const { return basis_[i]; }
  double rhs_of(std::size_t i) const { return rows_[i][width_ - 1]; }

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::size_t> basis_;
};

}  // namespace

SimplexSolution simplex_maximize(const std::vector<std::vector<double>>& eq_rows,
                                 const std::vector<double>& rhs,
                                 const std::vector<double>& objective) {
  const std::size_t m = eq_rows.size();
  const std::size_t n = objective.size();
  if (rhs.size() != m) fail(errc::dimension_mismatch, "rhs size mismatch");
  for (const auto& row : eq_rows)
    if (row.size() != n) fail(errc::dimension_mismatch, "constraint row size mismatch");

  Tableau tableau(eq_rows, rhs, n);

  // Phase one: maximize minus the sum of artificials.
  std::vector<double> phase1(n + m, 0.0);
  for (std::size_t j = n; j < n + m; ++j) phase1[j] = -1.0;
  while (tableau.pivot_step(phase1, n + m)) {
  }
  double infeasibility = 0.0;
  for (std::size_t i = 0; i < tableau.row_count(); ++i)
    if (tableau.basis_var(i) >= n) infeasibility += tableau.rhs_of(i);
  if (infeasibility > kPhaseOneTol)
    fail(errc::infeasible, "equality system has no nonnegative solution");
  tableau.drop_artificials();

  // Phase two: the real objective over structural columns only.
  std::vector<double> phase2(n + m, 0.0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = objective[j];
  while (tableau.pivot_step(phase2, n)) {
  }

  SimplexSolution solution;
  solution.x.assign(n, 0.0);
  for (std::size_t i = 0; i < tableau.row_count(); ++i)
    if (tableau.basis_var(i) < n)
      solution.x[tableau.basis_var(i)] = std::max(tableau.rhs_of(i), 0.0);
  for (std::size_t j = 0; j < n; ++j)
    solution.objective += objective[j] * solution.x[j];
  return solution;
}

}  // namespace pml::detail
