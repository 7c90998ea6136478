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

#ifndef PML_POLYTOPE_HPP_
#define PML_POLYTOPE_HPP_

#include <cstddef>
#include <vector>

#include "pml/core.hpp"
#include "pml/utility.hpp"

namespace pml {

// Linear description of the feasible set of N x N mechanisms at leakage
// level eps, over the N^2 variables p_{ij} in row-major order:
//   pml_rows:        p_{ij} - e^eps sum_{i'} prior_{i'} p_{i'j} <= 0
//   stochastic_rows: sum_j p_{ij} = 1
//   plus N^2 nonnegativity bounds p_{ij} >= 0.
struct ConstraintSystem {
  std::size_t n = 0;
  double eps = 0.0;
  Prior prior;
  std::vector<std::vector<double>> pml_rows;
  std::vector<std::vector<double>> stochastic_rows;
  std::size_t nonneg_count = 0;
};

ConstraintSystem build_constraints(const Prior& prior, double eps);

// All extreme points (basic feasible solutions) of the constraint system,
// found by exhausting per-column active sets, solving the resulting square
// systems exactly and keeping the feasible, deduplicated solutions. Results
// are sorted lexicographically by entries; distinct column orderings of the
// same equivalence class are distinct vertices. Guarded to N <= 4.
std::vector<Mechanism> enumerate_vertices(const ConstraintSystem& cs);

// Exhaustive optimum over the vertex set: evaluates the utility on every
// extreme point and returns an argmax (ties resolved to the first vertex in
// the sorted order).
DesignReport oracle_optimum(const Prior& prior, double eps, const ColumnUtility& u);

}  // namespace pml

#endif  // PML_POLYTOPE_HPP_
