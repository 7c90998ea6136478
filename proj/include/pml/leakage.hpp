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

#ifndef PML_LEAKAGE_HPP_
#define PML_LEAKAGE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "pml/core.hpp"

namespace pml {

// Privacy-region boundaries for a prior (all leakages in nats). With the
// prior sorted in non-increasing order, boundary k is
//   eps_k = -log(sum of the largest N-k probabilities),   k = 1..N-1,
// and eps_max = -log(min probability). Region k is the half-open interval
// [eps_{k-1}, eps_k) with eps_0 = 0; the last region N-1 is extended up to
// and including eps_max.
struct RegionTable {
  std::vector<double> boundaries;  // eps_1 .. eps_{N-1}
  double eps_max = 0.0;

  // Region index in [1, N-1]. Values within 1e-12 of a boundary are snapped
  // onto it first, so a boundary value lands in the upper region.
  int region_of(double eps) const;
};

RegionTable region_table(const Prior& prior);

// Largest leakage any mechanism can produce for this prior: -log(min prob).
double eps_max(const Prior& prior);

// Leakage of a single mechanism column against a prior,
//   log( max_i col[i] / sum_i prior_i col[i] ),
// clamped to >= 0. The column must have positive mass under the prior.
double column_leakage(const Prior& prior, std::span<const double> column);

// Leakage to one outcome: log( max_i p_{i,j} / P_Y(y_j) ), always >= 0.
// Fails with ZeroProbabilityOutcome when column j carries no output mass.
double pml_of_outcome(const Mechanism& mech, const Prior& prior,
                      std::size_t outcome_index);

// Smallest eps such that the mechanism meets the almost-sure eps guarantee:
// the maximum of pml_of_outcome over outcomes with positive mass. Columns
// with zero output mass carry no outcome and are skipped.
double epsilon_m(const Mechanism& mech, const Prior& prior);

// True iff epsilon_m(mech, prior) <= eps + 1e-9.
bool satisfies(const Mechanism& mech, const Prior& prior, double eps);

// Maximum number of zero entries a single column may contain at this privacy
// level: k - 1 where k is the privacy region of eps. Beyond the last region
// boundary -log(top probability) the allowance keeps growing with every
// boundary cleared, up to N - 1 just below eps_max.
int max_zeros_per_column(const Prior& prior, double eps);

}  // namespace pml

#endif  // PML_LEAKAGE_HPP_
