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

#ifndef PML_UTILITY_HPP_
#define PML_UTILITY_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pml/core.hpp"

namespace pml {

enum class UtilityKind { mutual_information, tv_information };

// Column-separable utility U(P) = sum_j mu(P_j) with mu sub-linear
// (homogeneous and subadditive). The prior supplies the weighting.
//
// mutual_information: mu(v) = sum_i prior_i v_i log(v_i / (prior . v)),
//   so U(P) is exactly I(X;Y). tv_information: mu(v) =
//   sum_i prior_i |v_i - (prior . v)|, the total-variation distance between
//   the joint and the product of its marginals when summed over columns.
struct ColumnUtility {
  UtilityKind kind = UtilityKind::mutual_information;
  Prior prior;
};

ColumnUtility mi_utility(Prior prior);
ColumnUtility tv_utility(Prior prior);

std::string to_string(UtilityKind kind);
UtilityKind utility_kind_from_string(const std::string& name);

// Score of one mechanism column (conditionals, entries >= 0, any scale).
// All-zero columns score 0. Both kinds use 0 log 0 = 0.
double column_utility(const ColumnUtility& u, std::span<const double> column);

// sum_j column_utility(P_j). For the mutual-information kind this equals the
// mutual information of the joint prior x mech.
double mechanism_utility(const ColumnUtility& u, const Mechanism& mech);

// Score of a lift vector (posterior-to-prior ratios, sum_i prior_i lift_i = 1).
// mutual_information: sum_i prior_i lift_i log lift_i;
// tv_information: sum_i prior_i |lift_i - 1|.
// Scaling a lift by an output weight recovers the column form:
//   column_utility(weight * lift) = weight * lift_utility(lift).
double lift_utility(const ColumnUtility& u, std::span<const double> lift);

// Plug-in mutual-information estimate from (x, y) index samples:
//   sum_{cells} (c_xy / n) log( n c_xy / (c_x c_y) ).
double empirical_mi(const std::vector<std::pair<int, int>>& samples,
                    std::size_t x_alphabet, std::size_t y_alphabet);

// Sample Pearson correlation coefficient of numeric pairs. Requires at least
// two samples and non-constant coordinates.
double pearson(const std::vector<std::pair<double, double>>& samples);

}  // namespace pml

#endif  // PML_UTILITY_HPP_
