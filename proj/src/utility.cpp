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

#include "pml/utility.hpp"

#include <algorithm>
#include <cmath>

namespace pml {

ColumnUtility mi_utility(Prior prior) {
  return ColumnUtility{UtilityKind::mutual_information, std::move(prior)};
}

ColumnUtility tv_utility(Prior prior) {
  return ColumnUtility{UtilityKind::tv_information, std::move(prior)};
}

std::string to_string(UtilityKind kind) {
  return kind == UtilityKind::mutual_information ? "mi" : "tv";
}

UtilityKind utility_kind_from_string(const std::string& name) {
  if (name == "mi") return UtilityKind::mutual_information;
  if (name == "tv") return UtilityKind::tv_information;
  fail(errc::invalid_argument, "unknown utility kind '" + name + "'");
}

double column_utility(const ColumnUtility& u, std::span<const double> column) {
  const Prior& prior = u.prior;
  if (column.size() != prior.size())
    fail(errc::dimension_mismatch, "column length must match prior size");
  double mass = 0.0;
  for (std::size_t i = 0; i < column.size(); ++i)
    mass += prior.prob(i) * column[i];
  if (!(mass > 0.0)) return 0.0;

  double score = 0.0;
  if (u.kind == UtilityKind::mutual_information) {
    const double log_mass = std::log(mass);
    for (std::size_t i = 0; i < column.size(); ++i) {
      const double v = column[i];
      if (v > 0.0) score += prior.prob(i) * v * (std::log(v) - log_mass);
    }
  } else {
    for (std::size_t i = 0; i < column.size(); ++i)
      score += prior.prob(i) * std::abs(column[i] - mass);
  }
  return std::max(score, 0.0);
}

double mechanism_utility(const ColumnUtility& u, const Mechanism& mech) {
  if (mech.rows() != u.prior.size())
    fail(errc::dimension_mismatch, "mechanism rows must match prior size");
  double total = 0.0;
  std::vector<double> column(mech.rows());
  for (std::size_t j = 0; j < mech.cols(); ++j) {
    for (std::size_t i = 0; i < mech.rows(); ++i) column[i] = mech.at(i, j);
    total += column_utility(u, column);
  }
  return total;
}

double lift_utility(const ColumnUtility& u, std::span<const double> lift) {
  const Prior& prior = u.prior;
  if (lift.size() != prior.size())
    fail(errc::dimension_mismatch, "lift length must match prior size");
  double mass = 0.0;
  for (std::size_t i = 0; i < lift.size(); ++i) {
    if (lift[i] < -1e-12)
      fail(errc::lift_not_normalized, "lift entries must be >= 0");
    mass += prior.prob(i) * lift[i];
  }
  if (std::abs(mass - 1.0) > 1e-9)
    fail(errc::lift_not_normalized, "prior-weighted lift sum must be 1");

  double score = 0.0;
  if (u.kind == UtilityKind::mutual_information) {
    for (std::size_t i = 0; i < lift.size(); ++i)
      if (lift[i] > 0.0) score += prior.prob(i) * lift[i] * std::log(lift[i]);
  } else {
    for (std::size_t i = 0; i < lift.size(); ++i)
      score += prior.prob(i) * std::abs(lift[i] - 1.0);
  }
  return std::max(score, 0.0);
}

double empirical_mi(const std::vector<std::pair<int, int>>& samples,
                    std::size_t x_alphabet, std::size_t y_alphabet) {
  if (samples.empty()) fail(errc::empty_sample, "need at least one sample");
  std::vector<double> joint(x_alphabet * y_alphabet, 0.0);
  std::vector<double> x_counts(x_alphabet, 0.0), y_counts(y_alphabet, 0.0);
  for (const auto& [x, y] : samples) {
    if (x < 0 || static_cast<std::size_t>(x) >= x_alphabet || y < 0 ||
        static_cast<std::size_t>(y) >= y_alphabet)
      fail(errc::dimension_mismatch, "sample index outside alphabet");
    joint[static_cast<std::size_t>(x) * y_alphabet + y] += 1.0;
    x_counts[x] += 1.0;
    y_counts[y] += 1.0;
  }
  const double n = static_cast<double>(samples.size());
  double mi = 0.0;
  for (std::size_t x = 0; x < x_alphabet; ++x) {
    for (std::size_t y = 0; y < y_alphabet; ++y) {
      const double c = joint[x * y_alphabet + y];
      if (c > 0.0) mi += (c / n) * std::log(n * c / (x_counts[x] * y_counts[y]));
    }
  }
  return std::max(mi, 0.0);
}

double pearson(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 2)
    fail(errc::degenerate_variance, "need at least two samples");
  const double n = static_cast<double>(samples.size());
  double x_min = samples.front().first, x_max = x_min;
  double y_min = samples.front().second, y_max = y_min;
  double x_mean = 0.0, y_mean = 0.0;
  for (const auto& [x, y] : samples) {
    x_mean += x;
    y_mean += y;
    x_min = std::min(x_min, x);
    x_max = std::max(x_max, x);
    y_min = std::min(y_min, y);
    y_max = std::max(y_max, y);
  }
  if (x_min == x_max || y_min == y_max)
    fail(errc::degenerate_variance, "a coordinate is constant");
  x_mean /= n;
  y_mean /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (const auto& [x, y] : samples) {
    sxy += (x - x_mean) * (y - y_mean);
    sxx += (x - x_mean) * (x - x_mean);
    syy += (y - y_mean) * (y - y_mean);
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace pml
