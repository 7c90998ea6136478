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

#include "pml/closed_form.hpp"

#include <cmath>
#include <vector>

#include "pml/leakage.hpp"

namespace pml {

namespace {

// Clears the floating noise a region boundary can leave behind.
double snap_nonnegative(double value) {
  return (value < 0.0 && value > -1e-12) ? 0.0 : value;
}

// Permutes a mechanism stated for the sorted prior back to the caller's
// symbol order, moving rows and the symbol-indexed columns together.
Mechanism map_back(const Prior& prior, const std::vector<double>& sorted_flat) {
  const std::size_t n = prior.size();
  std::vector<double> flat(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      flat[u * n + v] = sorted_flat[prior.rank_of(u) * n + prior.rank_of(v)];
  return make_mechanism(n, n, std::move(flat));
}

}  // namespace

Mechanism binary_optimal(const Prior& prior, double eps) {
  if (prior.size() != 2) fail(errc::bad_alphabet, "binary design needs N = 2");
  if (eps < 0.0) fail(errc::epsilon_out_of_range, "eps must be >= 0");
  if (eps > eps_max(prior)) return identity_mechanism(2);

  const double pi1 = prior.sorted()[0];
  const double pi2 = prior.sorted()[1];
  const double scale = std::exp(eps);
  std::vector<double> sorted_flat(4);
  if (pi1 < 1.0 / scale) {
    sorted_flat = {scale * pi2, 1.0 - scale * pi2,
                   1.0 - scale * pi1, scale * pi1};
  } else {
    const double top = scale * pi1;
    sorted_flat = {(scale - 1.0) / top, (1.0 - scale * pi2) / top,
                   0.0, 1.0};
  }
  for (double& p : sorted_flat) p = snap_nonnegative(p);
  return map_back(prior, sorted_flat);
}

Mechanism high_privacy_optimal(const Prior& prior, double eps) {
  if (eps < 0.0) fail(errc::epsilon_out_of_range, "eps must be >= 0");
  const RegionTable regions = region_table(prior);
  if (prior.size() < 2 ||
      (!regions.boundaries.empty() && eps >= regions.boundaries.front()))
    fail(errc::not_high_privacy, "eps is not in the first privacy region");

  const std::size_t n = prior.size();
  const double scale = std::exp(eps);
  std::vector<double> sorted_flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double value = (i == j)
                               ? 1.0 - scale * (1.0 - prior.sorted()[i])
                               : scale * prior.sorted()[j];
      sorted_flat[i * n + j] = snap_nonnegative(value);
    }
  }
  return map_back(prior, sorted_flat);
}

Mechanism uniform_optimal(std::size_t n, double eps) {
  if (n < 2) fail(errc::bad_alphabet, "uniform design needs N >= 2");
  if (eps < 0.0) fail(errc::epsilon_out_of_range, "eps must be >= 0");
  const double nd = static_cast<double>(n);
  if (eps >= std::log(nd)) return identity_mechanism(n);

  const std::size_t k =
      static_cast<std::size_t>(region_table(uniform_prior(n)).region_of(eps));
  const double shared = std::exp(eps) / nd;
  const double diagonal = snap_nonnegative(1.0 - shared * static_cast<double>(n - k));
  std::vector<double> flat(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    flat[j * n + j] = diagonal;
    for (std::size_t step = 1; step <= n - k; ++step)
      flat[((j + step) % n) * n + j] = shared;
  }
  return make_mechanism(n, n, std::move(flat));
}

double uniform_optimal_mi(std::size_t n, double eps) {
  if (n < 2) fail(errc::bad_alphabet, "uniform design needs N >= 2");
  if (eps < 0.0) fail(errc::epsilon_out_of_range, "eps must be >= 0");
  const double nd = static_cast<double>(n);
  if (eps >= std::log(nd)) return std::log(nd);

  const std::size_t k =
      static_cast<std::size_t>(region_table(uniform_prior(n)).region_of(eps));
  const double shared = std::exp(eps) / nd;
  const double rest = snap_nonnegative(1.0 - shared * static_cast<double>(n - k));
  double entropy = 0.0;
  if (shared > 0.0)
    entropy -= static_cast<double>(n - k) * shared * std::log(shared);
  if (rest > 0.0) entropy -= rest * std::log(rest);
  return std::log(nd) - entropy;
}

}  // namespace pml
