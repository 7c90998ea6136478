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

#ifndef PML_CLOSED_FORM_HPP_
#define PML_CLOSED_FORM_HPP_

#include <cstddef>

#include "pml/core.hpp"

namespace pml {

// Utility-optimal binary mechanism for any 0 <= eps <= eps_max. Writing
// pi_1 >= pi_2 for the sorted prior, the mechanism is
//   [[e^eps pi_2, 1 - e^eps pi_2], [1 - e^eps pi_1, e^eps pi_1]]
// when pi_1 < e^{-eps}, and otherwise the Z-channel
//   [[(e^eps - 1)/(e^eps pi_1), (1 - e^eps pi_2)/(e^eps pi_1)], [0, 1]].
// eps above eps_max yields the identity. Rows and columns are mapped back to
// the caller's symbol order.
Mechanism binary_optimal(const Prior& prior, double eps);

// Utility-optimal mechanism for any alphabet in the first privacy region
// (eps < eps_1, all entries strictly positive):
//   diagonal 1 - e^eps (1 - pi_i), off-diagonal column j equal to e^eps pi_j,
// stated for the sorted prior and mapped back to the caller's order. Its
// output distribution equals the prior and its leakage is exactly eps.
Mechanism high_privacy_optimal(const Prior& prior, double eps);

// Utility-optimal mechanism for a uniform prior in every privacy region.
// With k the region of eps, column j holds N-k entries e^eps / N placed
// cyclically on the rows below the diagonal (wrapping modulo N), the
// diagonal entry 1 - e^eps (N-k)/N, and zeros elsewhere. The matrix is
// doubly stochastic. eps >= log N yields the identity.
Mechanism uniform_optimal(std::size_t n, double eps);

// Mutual information achieved by uniform_optimal(n, eps):
//   log N - H(e^eps/N, ..., e^eps/N, 1 - (N-k) e^eps / N) in nats.
double uniform_optimal_mi(std::size_t n, double eps);

}  // namespace pml

#endif  // PML_CLOSED_FORM_HPP_
