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

#ifndef PML_RR_HPP_
#define PML_RR_HPP_

#include <cstddef>
#include <vector>

#include "pml/core.hpp"

namespace pml {

// Symmetric randomized response with local privacy parameter eps_r:
// diagonal e^{eps_r} / (N - 1 + e^{eps_r}), off-diagonal 1 / (N - 1 + e^{eps_r}).
Mechanism randomized_response(std::size_t n, double eps_r);

// Per-outcome leakage of randomized response against a prior:
// entry j is eps_r - log((e^{eps_r} - 1) prior_j + 1).
std::vector<double> rr_pml_per_outcome(const Prior& prior, double eps_r);

// Worst-case leakage, attained at the least likely symbol:
// log( e^{eps_r} / (p_min (e^{eps_r} - 1) + 1) ).
double rr_worst_case(const Prior& prior, double eps_r);

// The randomized-response parameter whose worst-case leakage equals eps_pml:
// eps_r = eps + log((1 - p_min) / (1 - p_min e^{eps})). Requires
// eps_pml < eps_max(prior); beyond that no parameter reaches the target.
double calibrate(const Prior& prior, double eps_pml);

}  // namespace pml

#endif  // PML_RR_HPP_
