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

#include "pml/rr.hpp"

#include <cmath>

namespace pml {

Mechanism randomized_response(std::size_t n, double eps_r) {
  if (n < 2) fail(errc::bad_alphabet, "randomized response needs N >= 2");
  if (eps_r < 0.0) fail(errc::negative_epsilon, "eps_r must be >= 0");
  const double denom = static_cast<double>(n - 1) + std::exp(eps_r);
  const double off_diagonal = 1.0 / denom;
  const double diagonal = std::exp(eps_r) / denom;
  std::vector<double> flat(n * n, off_diagonal);
  for (std::size_t i = 0; i < n; ++i) flat[i * n + i] = diagonal;
  return make_mechanism(n, n, std::move(flat));
}

std::vector<double> rr_pml_per_outcome(const Prior& prior, double eps_r) {
  if (prior.size() < 2) fail(errc::dimension_mismatch, "prior needs N >= 2");
  if (eps_r < 0.0) fail(errc::negative_epsilon, "eps_r must be >= 0");
  const double expm1_eps = std::expm1(eps_r);
  std::vector<double> leakages(prior.size());
  for (std::size_t j = 0; j < prior.size(); ++j)
    leakages[j] = eps_r - std::log1p(expm1_eps * prior.prob(j));
  return leakages;
}

double rr_worst_case(const Prior& prior, double eps_r) {
  if (prior.size() < 2) fail(errc::dimension_mismatch, "prior needs N >= 2");
  if (eps_r < 0.0) fail(errc::negative_epsilon, "eps_r must be >= 0");
  return eps_r - std::log1p(std::expm1(eps_r) * prior.min_prob());
}

double calibrate(const Prior& prior, double eps_pml) {
  if (eps_pml < 0.0) fail(errc::epsilon_out_of_range, "eps must be >= 0");
  const double p_min = prior.min_prob();
  const double remainder = 1.0 - p_min * std::exp(eps_pml);
  if (remainder <= 0.0)
    fail(errc::epsilon_out_of_range,
         "no randomized-response parameter reaches eps >= eps_max");
  return eps_pml + std::log((1.0 - p_min) / remainder);
}

}  // namespace pml
