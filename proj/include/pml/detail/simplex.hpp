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

#ifndef PML_DETAIL_SIMPLEX_HPP_
#define PML_DETAIL_SIMPLEX_HPP_

#include <cstddef>
#include <vector>

namespace pml::detail {

struct SimplexSolution {
  std::vector<double> x;
  double objective = 0.0;
};

// Maximizes objective . x subject to eq_rows x = rhs, x >= 0 (rhs >= 0).
// Dense two-phase tableau with Bland's anti-cycling rule; redundant equality
// rows are detected in phase one and dropped. Throws Error(infeasible) /
// Error(unbounded).
SimplexSolution simplex_maximize(const std::vector<std::vector<double>>& eq_rows,
                                 const std::vector<double>& rhs,
                                 const std::vector<double>& objective);

}  // namespace pml::detail

#endif  // PML_DETAIL_SIMPLEX_HPP_
