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

#ifndef PML_LP_HPP_
#define PML_LP_HPP_

#include <cstddef>
#include <vector>

#include "pml/core.hpp"
#include "pml/utility.hpp"

namespace pml {

// Posterior-to-prior ratio vector of one outcome: entries
// lift_i = P(x_i | y) / prior_i. Feasible lifts live in [0, e^eps]^N, are
// prior-normalized (sum_i prior_i lift_i = 1) and put at least e^{-eps} of
// prior mass on their support.
struct LiftVector {
  std::vector<double> entries;
};

// The extreme points of the feasible lift polytope at a given privacy level.
struct LiftSet {
  std::vector<LiftVector> vertices;
  int region = 1;
  double epsilon = 0.0;
};

// Enumerates the extremal lift vectors: for every admissible support of size
// N-l+1 (l = 1..region) whose prior mass reaches e^{-eps}, each support index
// in turn becomes the one free entry while the rest sit at e^eps; candidates
// with a negative free entry are skipped and duplicates (within 1e-12) are
// removed. Requires 0 <= eps < eps_max.
LiftSet enumerate_lift_vertices(const Prior& prior, double eps);

// Candidate-count bound sum_{l=1..k} (N-l+1) C(N, l-1) for the size of the
// lift vertex set in region k.
std::size_t lift_count_bound(std::size_t n, int region);

struct WeightSolution {
  std::vector<double> weights;  // one output weight per lift vertex
  double objective = 0.0;
};

// Chooses output weights over the lift vertices by linear programming:
// maximize sum_j w_j mu(lift_j) subject to sum_j w_j = 1 and
// sum_j w_j lift_{ij} = 1 for every input symbol, w >= 0. Returns an optimal
// basic solution (at most N+1 positive weights) and its objective value.
WeightSolution solve_weights(const LiftSet& lifts, const Prior& prior,
                             const ColumnUtility& u);

// Assembles the mechanism whose columns are the positively weighted lifts
// scaled by their weights: p_{ij} = lift_{ij} w_j. The weighted lifts must
// reproduce unit row sums within 1e-8.
Mechanism reconstruct(const std::vector<LiftVector>& lifts,
                      const std::vector<double>& weights, const Prior& prior);

// End-to-end design for any prior and privacy level: lift vertex enumeration,
// the weight LP, and mechanism reconstruction. eps >= eps_max yields the
// identity mechanism.
DesignReport lp_optimal(const Prior& prior, double eps, const ColumnUtility& u);

}  // namespace pml

#endif  // PML_LP_HPP_
