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

#include "pml/lp.hpp"

#include <algorithm>
#include <cmath>

#include "pml/detail/simplex.hpp"
#include "pml/leakage.hpp"

namespace pml {

namespace {

constexpr double kLiftDedupTol = 1e-12;
constexpr double kBoundarySlack = 1e-12;

// Visits every subset of {0..n-1} of the given size in lexicographic order.
template <typename Visitor>
void for_each_subset(std::size_t n, std::size_t size, Visitor&& visit) {
  std::vector<std::size_t> indices(size);
  for (std::size_t i = 0; i < size; ++i) indices[i] = i;
  while (true) {
    visit(indices);
    std::size_t pos = size;
    while (pos > 0 && indices[pos - 1] == n - size + pos - 1) --pos;
    if (pos == 0) break;
    ++indices[pos - 1];
    for (std::size_t i = pos; i < size; ++i) indices[i] = indices[i - 1] + 1;
  }
}

bool near_duplicate(const std::vector<LiftVector>& kept,
                    const std::vector<double>& candidate) {
  for (const auto& lift : kept) {
    double dist = 0.0;
    for (std::size_t i = 0; i < candidate.size(); ++i)
      dist = std::max(dist, std::abs(lift.entries[i] - candidate[i]));
    if (dist <= kLiftDedupTol) return true;
  }
  return false;
}

}  // namespace

LiftSet enumerate_lift_vertices(const Prior& prior, double eps) {
  if (eps < 0.0) fail(errc::epsilon_out_of_range, "eps must be >= 0");
  if (eps >= eps_max(prior))
    fail(errc::epsilon_out_of_range, "eps must be below eps_max");

  const std::size_t n = prior.size();
  const double scale = std::exp(eps);
  const double min_support_mass = std::exp(-eps);

  LiftSet lifts;
  lifts.region = region_table(prior).region_of(eps);
  lifts.epsilon = eps;

  // Supports shrink by one entry per boundary cleared; above the last
  // boundary (non-uniform priors only) singleton supports become feasible,
  // so the deepest level is the zero allowance plus one, not the region.
  const int max_level = max_zeros_per_column(prior, eps) + 1;
  for (int level = 1; level <= max_level; ++level) {
    const std::size_t support_size = n - static_cast<std::size_t>(level) + 1;
    for_each_subset(n, support_size, [&](const std::vector<std::size_t>& support) {
      double support_mass = 0.0;
      for (std::size_t m : support) support_mass += prior.prob(m);
      if (support_mass + kBoundarySlack < min_support_mass) return;

      for (std::size_t free_index : support) {
        const double rest_mass = support_mass - prior.prob(free_index);
        if (scale * rest_mass > 1.0 + kBoundarySlack) continue;
        std::vector<double> lift(n, 0.0);
        for (std::size_t m : support) lift[m] = scale;
        lift[free_index] = std::clamp(
            (1.0 - scale * rest_mass) / prior.prob(free_index), 0.0, scale);
        if (!near_duplicate(lifts.vertices, lift))
          lifts.vertices.push_back(LiftVector{std::move(lift)});
      }
    });
  }
  return lifts;
}

std::size_t lift_count_bound(std::size_t n, int region) {
  auto choose = [](std::size_t n_, std::size_t k_) {
    std::size_t result = 1;
    for (std::size_t i = 1; i <= k_; ++i) result = result * (n_ - k_ + i) / i;
    return result;
  };
  std::size_t bound = 0;
  for (int level = 1; level <= region; ++level) {
    const std::size_t l = static_cast<std::size_t>(level);
    bound += (n - l + 1) * choose(n, l - 1);
  }
  return bound;
}

WeightSolution solve_weights(const LiftSet& lifts, const Prior& prior,
                             const ColumnUtility& u) {
  if (lifts.vertices.empty()) fail(errc::infeasible, "empty lift set");
  const std::size_t n = prior.size();
  const std::size_t candidates = lifts.vertices.size();

  std::vector<std::vector<double>> rows(n + 1, std::vector<double>(candidates, 1.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < candidates; ++j)
      rows[i + 1][j] = lifts.vertices[j].entries[i];

  std::vector<double> costs(candidates);
  for (std::size_t j = 0; j < candidates; ++j)
    costs[j] = lift_utility(u, lifts.vertices[j].entries);

  const detail::SimplexSolution solution =
      detail::simplex_maximize(rows, std::vector<double>(n + 1, 1.0), costs);
  return WeightSolution{solution.x, solution.objective};
}

Mechanism reconstruct(const std::vector<LiftVector>& lifts,
                      const std::vector<double>& weights, const Prior& prior) {
  if (lifts.size() != weights.size())
    fail(errc::dimension_mismatch, "one weight per lift vector required");
  const std::size_t n = prior.size();

  std::vector<std::size_t> selected;
  double total_weight = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] < -1e-12)
      fail(errc::inconsistent_weights, "weights must be nonnegative");
    if (weights[j] > 1e-12) selected.push_back(j);
    total_weight += weights[j];
  }
  if (selected.empty() || std::abs(total_weight - 1.0) > 1e-8)
    fail(errc::inconsistent_weights, "weights must sum to 1");

  std::vector<std::vector<double>> matrix(n, std::vector<double>(selected.size()));
  for (std::size_t i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (std::size_t s = 0; s < selected.size(); ++s) {
      const std::size_t j = selected[s];
      matrix[i][s] = lifts[j].entries[i] * weights[j];
      row_sum += matrix[i][s];
    }
    if (std::abs(row_sum - 1.0) > 1e-8)
      fail(errc::inconsistent_weights,
           "weighted lifts do not reproduce unit row sums");
    for (double& p : matrix[i]) p /= row_sum;
  }
  return make_mechanism(matrix);
}

DesignReport lp_optimal(const Prior& prior, double eps, const ColumnUtility& u) {
  if (eps < 0.0) fail(errc::epsilon_out_of_range, "eps must be >= 0");
  DesignReport report;
  report.epsilon_requested = eps;
  report.method = DesignMethod::lp;
  report.prior = prior;

  if (eps >= eps_max(prior)) {
    report.mechanism = identity_mechanism(prior.size());
  } else {
    const LiftSet lifts = enumerate_lift_vertices(prior, eps);
    const WeightSolution solution = solve_weights(lifts, prior, u);
    report.mechanism = reconstruct(lifts.vertices, solution.weights, prior);
  }
  report.epsilon_achieved = epsilon_m(report.mechanism, prior);
  report.utility = mechanism_utility(u, report.mechanism);
  return report;
}

}  // namespace pml
