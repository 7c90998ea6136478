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

#include "pml/leakage.hpp"

#include <algorithm>
#include <cmath>

namespace pml {

namespace {
constexpr double kBoundarySnapTol = 1e-12;
constexpr double kSatisfiesTol = 1e-9;
}  // namespace

int RegionTable::region_of(double eps) const {
  double snapped = eps;
  for (double boundary : boundaries) {
    if (std::abs(eps - boundary) <= kBoundarySnapTol) {
      snapped = boundary;
      break;
    }
  }
  const int regions = static_cast<int>(boundaries.size());
  for (int k = 1; k <= regions; ++k) {
    if (snapped < boundaries[k - 1]) return k;
  }
  return std::max(regions, 1);
}

RegionTable region_table(const Prior& prior) {
  const std::size_t n = prior.size();
  RegionTable table;
  table.eps_max = -std::log(prior.min_prob());
  table.boundaries.reserve(n >= 1 ? n - 1 : 0);
  double head_mass = 1.0;
  // Boundary k strips the k smallest sorted probabilities off the total.
  for (std::size_t k = 1; k < n; ++k) {
    head_mass -= prior.sorted()[n - k];
    table.boundaries.push_back(-std::log(head_mass));
  }
  return table;
}

double eps_max(const Prior& prior) { return -std::log(prior.min_prob()); }

double column_leakage(const Prior& prior, std::span<const double> column) {
  if (column.size() != prior.size())
    fail(errc::dimension_mismatch, "column length must match prior size");
  double max_entry = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < column.size(); ++i) {
    max_entry = std::max(max_entry, column[i]);
    mass += prior.prob(i) * column[i];
  }
  if (!(mass > 0.0))
    fail(errc::zero_probability_outcome, "column carries no output mass");
  return std::max(std::log(max_entry) - std::log(mass), 0.0);
}

double pml_of_outcome(const Mechanism& mech, const Prior& prior,
                      std::size_t outcome_index) {
  if (mech.rows() != prior.size())
    fail(errc::dimension_mismatch, "mechanism rows must match prior size");
  if (outcome_index >= mech.cols())
    fail(errc::dimension_mismatch, "outcome index out of range");
  const std::vector<double> column = mech.column(outcome_index);
  return column_leakage(prior, column);
}

double epsilon_m(const Mechanism& mech, const Prior& prior) {
  if (mech.rows() != prior.size())
    fail(errc::dimension_mismatch, "mechanism rows must match prior size");
  double worst = 0.0;
  bool any_outcome = false;
  for (std::size_t j = 0; j < mech.cols(); ++j) {
    const std::vector<double> column = mech.column(j);
    const bool has_mass =
        std::any_of(column.begin(), column.end(), [](double p) { return p > 0.0; });
    if (!has_mass) continue;  // all-zero column, no outcome
    any_outcome = true;
    worst = std::max(worst, column_leakage(prior, column));
  }
  if (!any_outcome)
    fail(errc::zero_probability_outcome, "mechanism has no outcome with mass");
  return worst;
}

bool satisfies(const Mechanism& mech, const Prior& prior, double eps) {
  return epsilon_m(mech, prior) <= eps + kSatisfiesTol;
}

int max_zeros_per_column(const Prior& prior, double eps) {
  if (eps < 0.0) fail(errc::epsilon_out_of_range, "eps must be >= 0");
  // Number of boundaries at or below eps. This equals region_of(eps) - 1
  // inside every privacy region; above the last boundary (possible only for
  // non-uniform priors) the allowance keeps growing up to N - 1.
  const RegionTable table = region_table(prior);
  int zeros = 0;
  for (double boundary : table.boundaries)
    if (boundary <= eps + kBoundarySnapTol) ++zeros;
  return zeros;
}

}  // namespace pml
