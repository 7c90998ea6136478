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

#include "pml/polytope.hpp"

#include <algorithm>
#include <cmath>

#include "pml/detail/linalg.hpp"
#include "pml/leakage.hpp"

namespace pml {

namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kDedupTol = 1e-9;

// A face of the per-column cone {c >= 0, c_i <= e^eps (prior . c)}: the
// linear span of the columns lying on a fixed set of active constraints.
struct ConeFace {
  std::vector<std::vector<double>> basis;  // spanning vectors, basis.size() = dim
  unsigned closure = 0;                    // bitmask of all constraints active on the span
};

// Enumerates the distinct faces of the cone, keyed by the closure of their
// active sets. Constraint r < n is the leakage bound for row r, constraint
// n + r is nonnegativity of entry r.
std::vector<ConeFace> enumerate_cone_faces(const std::vector<std::vector<double>>& cone_rows,
                                           std::size_t n) {
  const std::size_t row_count = cone_rows.size();
  std::vector<ConeFace> faces;
  std::vector<unsigned> seen;
  for (unsigned mask = 0; mask < (1u << row_count); ++mask) {
    std::vector<std::vector<double>> active;
    for (std::size_t r = 0; r < row_count; ++r)
      if (mask & (1u << r)) active.push_back(cone_rows[r]);
    auto basis = detail::nullspace_basis(std::move(active), n);
    unsigned closure = 0;
    for (std::size_t r = 0; r < row_count; ++r) {
      bool vanishes = true;
      for (const auto& v : basis)
        if (std::abs(detail::dot(cone_rows[r], v)) > 1e-9) { vanishes = false; break; }
      if (vanishes) closure |= (1u << r);
    }
    if (std::find(seen.begin(), seen.end(), closure) != seen.end()) continue;
    seen.push_back(closure);
    faces.push_back(ConeFace{std::move(basis), closure});
  }
  return faces;
}

bool column_feasible(const std::vector<std::vector<double>>& cone_rows,
                     const std::vector<double>& column) {
  for (const auto& row : cone_rows)
    if (detail::dot(row, column) < -kFeasTol) return false;
  return true;
}

}  // namespace

ConstraintSystem build_constraints(const Prior& prior, double eps) {
  if (eps < 0.0) fail(errc::epsilon_out_of_range, "eps must be >= 0");
  const std::size_t n = prior.size();
  ConstraintSystem cs;
  cs.n = n;
  cs.eps = eps;
  cs.prior = prior;
  cs.nonneg_count = n * n;
  const double scale = std::exp(eps);

  cs.pml_rows.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> row(n * n, 0.0);
      for (std::size_t ii = 0; ii < n; ++ii) row[ii * n + j] = -scale * prior.prob(ii);
      row[i * n + j] += 1.0;
      cs.pml_rows.push_back(std::move(row));
    }
  }
  cs.stochastic_rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) row[i * n + j] = 1.0;
    cs.stochastic_rows.push_back(std::move(row));
  }
  return cs;
}

std::vector<Mechanism> enumerate_vertices(const ConstraintSystem& cs) {
  const std::size_t n = cs.n;
  if (n > 4) fail(errc::too_large, "vertex enumeration is guarded to N <= 4");

  // In-column constraint normals, all as a . c >= 0: leakage rows
  // e^eps prior - e_i, then nonnegativity rows e_i.
  const double scale = std::exp(cs.eps);
  std::vector<std::vector<double>> cone_rows;
  cone_rows.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(n);
    for (std::size_t ii = 0; ii < n; ++ii) row[ii] = scale * cs.prior.prob(ii);
    row[i] -= 1.0;
    cone_rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(n, 0.0);
    row[i] = 1.0;
    cone_rows.push_back(std::move(row));
  }

  const std::vector<ConeFace> faces = enumerate_cone_faces(cone_rows, n);

  // A vertex assigns each column a face with the dimensions summing to N;
  // the row-sum equalities then pin one point per assignment.
  std::vector<std::vector<double>> found;
  std::vector<const ConeFace*> choice(n, nullptr);

  auto try_assignment = [&]() {
    std::vector<std::vector<double>> system(n, std::vector<double>(n, 0.0));
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& v : choice[j]->basis) {
        for (std::size_t i = 0; i < n; ++i) system[i][col] = v[i];
        ++col;
      }
    }
    auto coeffs = detail::solve_square(system, std::vector<double>(n, 1.0));
    if (!coeffs) return;

    std::vector<double> flat(n * n, 0.0);
    std::size_t offset = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> column(n, 0.0);
      for (const auto& v : choice[j]->basis) {
        for (std::size_t i = 0; i < n; ++i) column[i] += (*coeffs)[offset] * v[i];
        ++offset;
      }
      if (!column_feasible(cone_rows, column)) return;
      for (std::size_t i = 0; i < n; ++i) {
        if (column[i] > 1.0 + kFeasTol) return;
        flat[i * n + j] = column[i];
      }
    }
    for (const auto& kept : found) {
      double dist = 0.0;
      for (std::size_t t = 0; t < flat.size(); ++t)
        dist = std::max(dist, std::abs(kept[t] - flat[t]));
      if (dist <= kDedupTol) return;
    }
    found.push_back(std::move(flat));
  };

  auto recurse = [&](auto&& self, std::size_t j, std::size_t budget) -> void {
    if (j == n) {
      if (budget == 0) try_assignment();
      return;
    }
    for (const auto& face : faces) {
      if (face.basis.size() > budget) continue;
      choice[j] = &face;
      self(self, j + 1, budget - face.basis.size());
    }
  };
  recurse(recurse, 0, n);

  std::sort(found.begin(), found.end());
  std::vector<Mechanism> vertices;
  vertices.reserve(found.size());
  for (auto& flat : found) {
    Mechanism mech = make_mechanism(n, n, std::move(flat));
    if (satisfies(mech, cs.prior, cs.eps)) vertices.push_back(std::move(mech));
  }
  return vertices;
}

DesignReport oracle_optimum(const Prior& prior, double eps, const ColumnUtility& u) {
  if (prior.size() > 4) fail(errc::too_large, "oracle is guarded to N <= 4");
  const ConstraintSystem cs = build_constraints(prior, eps);
  const std::vector<Mechanism> vertices = enumerate_vertices(cs);
  if (vertices.empty()) fail(errc::infeasible, "no vertex found");

  std::size_t best = 0;
  double best_utility = mechanism_utility(u, vertices[0]);
  for (std::size_t v = 1; v < vertices.size(); ++v) {
    const double utility = mechanism_utility(u, vertices[v]);
    if (utility > best_utility) {
      best_utility = utility;
      best = v;
    }
  }
  DesignReport report;
  report.mechanism = vertices[best];
  report.epsilon_requested = eps;
  report.epsilon_achieved = epsilon_m(vertices[best], prior);
  report.utility = best_utility;
  report.method = DesignMethod::oracle;
  report.prior = prior;
  return report;
}

}  // namespace pml
