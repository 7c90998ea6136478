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

#ifndef PML_SIMULATE_HPP_
#define PML_SIMULATE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pml/core.hpp"
#include "pml/utility.hpp"

namespace pml {

// Equidistant leakage grid [start, stop] stepped by step (all in nats).
struct EpsGrid {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;

  std::vector<double> points() const;
};

enum class SimMethod { pml_optimal, randomized_response };
enum class SimEstimator { empirical_mi, pearson };

std::string to_string(SimMethod method);
std::string to_string(SimEstimator estimator);
SimMethod sim_method_from_string(const std::string& name);
SimEstimator sim_estimator_from_string(const std::string& name);

struct SimulationConfig {
  Prior prior;
  EpsGrid grid;
  int samples_per_trial = 1000;
  int trials = 10;
  std::uint64_t seed = 0;
  std::vector<SimEstimator> estimators = {SimEstimator::empirical_mi,
                                          SimEstimator::pearson};
  std::vector<SimMethod> methods = {SimMethod::pml_optimal,
                                    SimMethod::randomized_response};
};

// Fails unless n >= 1, trials >= 1, step > 0 and the grid stays in
// [0, eps_max).
void validate_config(const SimulationConfig& config);

struct SimRow {
  double eps = 0.0;
  int trial = 0;
  SimMethod method = SimMethod::pml_optimal;
  SimEstimator estimator = SimEstimator::empirical_mi;
  std::optional<double> value;  // empty for degenerate estimates
};

// Privatizes seeded synthetic data and scores it with the requested
// estimators. Trial t draws from its own SplitMix64 stream seeded with
// seed + t; within a trial the grid is traversed in order, one shared input
// sample per grid point, privatized by each method in turn. Because the
// correlation estimator is sensitive to output labeling (which the designs
// leave free up to column permutation), every mechanism's outcome labels are
// aligned to maximize the exact index correlation before sampling. Rows come
// out sorted by (eps, trial, method, estimator) and are byte-reproducible
// for a fixed config.
std::vector<SimRow> run_simulation(const SimulationConfig& config);

struct CompareRow {
  double eps = 0.0;
  double utility_pml_optimal = 0.0;
  double utility_rr_calibrated = 0.0;
};

// Exact utilities along a leakage grid: the utility-optimal mechanism versus
// randomized response calibrated to the same worst-case leakage.
std::vector<CompareRow> run_compare(const Prior& prior,
                                    const std::vector<double>& eps_grid,
                                    UtilityKind kind);

// Method dispatch used by design, compare and simulate: binary alphabets use
// the binary closed form, the first privacy region the high-privacy form,
// uniform priors the cyclic form, everything else the lift LP.
DesignReport auto_design(const Prior& prior, double eps, const ColumnUtility& u);

}  // namespace pml

#endif  // PML_SIMULATE_HPP_
