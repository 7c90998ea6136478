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

#include "pml/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "pml/closed_form.hpp"
#include "pml/leakage.hpp"
#include "pml/lp.hpp"
#include "pml/random.hpp"
#include "pml/rr.hpp"

namespace pml {

std::vector<double> EpsGrid::points() const {
  std::vector<double> grid;
  if (step <= 0.0) fail(errc::invalid_argument, "grid step must be > 0");
  for (double eps = start; eps <= stop + 1e-12; eps += step)
    grid.push_back(std::min(eps, stop));
  return grid;
}

std::string to_string(SimMethod method) {
  return method == SimMethod::pml_optimal ? "pml_optimal" : "randomized_response";
}

std::string to_string(SimEstimator estimator) {
  return estimator == SimEstimator::empirical_mi ? "empirical_mi" : "pearson";
}

SimMethod sim_method_from_string(const std::string& name) {
  if (name == "pml_optimal") return SimMethod::pml_optimal;
  if (name == "randomized_response") return SimMethod::randomized_response;
  fail(errc::invalid_argument, "unknown method '" + name + "'");
}

SimEstimator sim_estimator_from_string(const std::string& name) {
  if (name == "empirical_mi") return SimEstimator::empirical_mi;
  if (name == "pearson") return SimEstimator::pearson;
  fail(errc::invalid_argument, "unknown estimator '" + name + "'");
}

void validate_config(const SimulationConfig& config) {
  if (config.samples_per_trial < 1)
    fail(errc::invalid_argument, "need at least one sample per trial");
  if (config.trials < 1) fail(errc::invalid_argument, "need at least one trial");
  if (config.grid.step <= 0.0) fail(errc::invalid_argument, "grid step must be > 0");
  if (config.grid.start < 0.0 || config.grid.stop < config.grid.start)
    fail(errc::invalid_argument, "grid must be an interval within [0, eps_max)");
  if (config.grid.stop >= eps_max(config.prior))
    fail(errc::invalid_argument, "grid must stay below eps_max");
  if (config.estimators.empty() || config.methods.empty())
    fail(errc::invalid_argument, "need at least one estimator and one method");
}

DesignReport auto_design(const Prior& prior, double eps, const ColumnUtility& u) {
  auto finish = [&](Mechanism mech, DesignMethod method) {
    DesignReport report;
    report.mechanism = std::move(mech);
    report.epsilon_requested = eps;
    report.epsilon_achieved = epsilon_m(report.mechanism, prior);
    report.utility = mechanism_utility(u, report.mechanism);
    report.method = method;
    report.prior = prior;
    return report;
  };
  if (prior.size() == 2)
    return finish(binary_optimal(prior, eps), DesignMethod::binary);
  if (eps < eps_max(prior) && region_table(prior).region_of(eps) == 1)
    return finish(high_privacy_optimal(prior, eps), DesignMethod::high_privacy);
  if (prior.is_uniform())
    return finish(uniform_optimal(prior.size(), eps), DesignMethod::uniform);
  return lp_optimal(prior, eps, u);
}

namespace {

// Exact index correlation of prior x mech with symbols valued 1..N / 1..M.
double exact_index_correlation(const Prior& prior, const Mechanism& mech,
                               const std::vector<std::size_t>& column_of) {
  const std::size_t n = mech.rows();
  const std::size_t m = mech.cols();
  double ex = 0.0, exx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i + 1);
    ex += prior.prob(i) * x;
    exx += prior.prob(i) * x * x;
  }
  double ey = 0.0, eyy = 0.0, exy = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double y = static_cast<double>(j + 1);
    double mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double joint = prior.prob(i) * mech.at(i, column_of[j]);
      mass += joint;
      exy += joint * static_cast<double>(i + 1) * y;
    }
    ey += mass * y;
    eyy += mass * y * y;
  }
  const double var_x = exx - ex * ex;
  const double var_y = eyy - ey * ey;
  if (var_x <= 0.0 || var_y <= 0.0) return 0.0;
  return (exy - ex * ey) / std::sqrt(var_x * var_y);
}

// Correlation depends on how outcomes are labeled, which the design leaves
// free (column permutations preserve leakage and utility). Relabels the
// outcomes so the index correlation is maximal; applied to every method
// alike before sampling.
Mechanism align_output_labels(const Mechanism& mech, const Prior& prior) {
  const std::size_t m = mech.cols();
  if (m > 8) return mech;
  std::vector<std::size_t> column_of(m);
  for (std::size_t j = 0; j < m; ++j) column_of[j] = j;
  std::vector<std::size_t> best = column_of;
  double best_r = exact_index_correlation(prior, mech, column_of);
  while (std::next_permutation(column_of.begin(), column_of.end())) {
    const double r = exact_index_correlation(prior, mech, column_of);
    if (r > best_r + 1e-15) {
      best_r = r;
      best = column_of;
    }
  }
  std::vector<std::vector<double>> rows(mech.rows(), std::vector<double>(m));
  for (std::size_t i = 0; i < mech.rows(); ++i)
    for (std::size_t j = 0; j < m; ++j) rows[i][j] = mech.at(i, best[j]);
  return make_mechanism(rows);
}

std::vector<int> privatize(const std::vector<int>& inputs, const Mechanism& mech,
                           SplitMix64& rng) {
  std::vector<int> outputs(inputs.size());
  for (std::size_t s = 0; s < inputs.size(); ++s)
    outputs[s] = static_cast<int>(
        sample_index(mech.row(static_cast<std::size_t>(inputs[s])), rng.next_unit()));
  return outputs;
}

std::optional<double> estimate(SimEstimator estimator, const std::vector<int>& xs,
                               const std::vector<int>& ys, std::size_t n_symbols,
                               std::size_t m_symbols) {
  if (estimator == SimEstimator::empirical_mi) {
    std::vector<std::pair<int, int>> pairs(xs.size());
    for (std::size_t s = 0; s < xs.size(); ++s) pairs[s] = {xs[s], ys[s]};
    return empirical_mi(pairs, n_symbols, m_symbols);
  }
  // Symbol indices enter the correlation as the numeric values 1..N.
  std::vector<std::pair<double, double>> pairs(xs.size());
  for (std::size_t s = 0; s < xs.size(); ++s)
    pairs[s] = {static_cast<double>(xs[s] + 1), static_cast<double>(ys[s] + 1)};
  try {
    return pearson(pairs);
  } catch (const Error& e) {
    if (e.code() == errc::degenerate_variance) return std::nullopt;
    throw;
  }
}

}  // namespace

std::vector<SimRow> run_simulation(const SimulationConfig& config) {
  validate_config(config);
  const std::vector<double> grid = config.grid.points();
  const Prior& prior = config.prior;
  const ColumnUtility mi = mi_utility(prior);

  // Mechanisms depend only on eps; build them once per grid point, with
  // output labels aligned for the correlation estimator.
  std::vector<std::vector<std::pair<SimMethod, Mechanism>>> per_eps(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (SimMethod method : config.methods) {
      Mechanism mech =
          method == SimMethod::pml_optimal
              ? auto_design(prior, grid[g], mi).mechanism
              : randomized_response(prior.size(), calibrate(prior, grid[g]));
      per_eps[g].emplace_back(method, align_output_labels(mech, prior));
    }
  }

  std::vector<SimRow> rows;
  for (int trial = 0; trial < config.trials; ++trial) {
    SplitMix64 rng(config.seed + static_cast<std::uint64_t>(trial));
    for (std::size_t g = 0; g < grid.size(); ++g) {
      std::vector<int> inputs(static_cast<std::size_t>(config.samples_per_trial));
      for (int& x : inputs)
        x = static_cast<int>(sample_index(prior.probs(), rng.next_unit()));
      for (const auto& [method, mech] : per_eps[g]) {
        const std::vector<int> outputs = privatize(inputs, mech, rng);
        for (SimEstimator estimator : config.estimators) {
          SimRow row;
          row.eps = grid[g];
          row.trial = trial;
          row.method = method;
          row.estimator = estimator;
          row.value = estimate(estimator, inputs, outputs, prior.size(), mech.cols());
          rows.push_back(std::move(row));
        }
      }
    }
  }

  std::sort(rows.begin(), rows.end(), [](const SimRow& a, const SimRow& b) {
    if (a.eps != b.eps) return a.eps < b.eps;
    if (a.trial != b.trial) return a.trial < b.trial;
    if (a.method != b.method) return a.method < b.method;
    return a.estimator < b.estimator;
  });
  return rows;
}

std::vector<CompareRow> run_compare(const Prior& prior,
                                    const std::vector<double>& eps_grid,
                                    UtilityKind kind) {
  const double limit = eps_max(prior);
  const ColumnUtility u{kind, prior};
  std::vector<CompareRow> rows;
  rows.reserve(eps_grid.size());
  for (double eps : eps_grid) {
    if (eps < 0.0 || eps >= limit)
      fail(errc::epsilon_out_of_range, "compare grid must stay within [0, eps_max)");
    CompareRow row;
    row.eps = eps;
    row.utility_pml_optimal = auto_design(prior, eps, u).utility;
    row.utility_rr_calibrated =
        mechanism_utility(u, randomized_response(prior.size(), calibrate(prior, eps)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pml
