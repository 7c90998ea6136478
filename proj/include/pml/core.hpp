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

#ifndef PML_CORE_HPP_
#define PML_CORE_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pml {

enum class errc {
  zero_mass_symbol,
  not_normalized,
  dimension_mismatch,
  zero_probability_outcome,
  bad_alphabet,
  negative_epsilon,
  epsilon_out_of_range,
  not_high_privacy,
  too_large,
  lift_not_normalized,
  inconsistent_weights,
  empty_sample,
  degenerate_variance,
  infeasible,
  unbounded,
  negative_entry,
  not_row_stochastic,
  invalid_argument,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message);
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

// Full-support probability mass function over the input alphabet. The user
// ordering of symbols is preserved; a descending-probability view and the
// permutation between both orderings are kept alongside it.
class Prior {
 public:
  Prior() = default;

  std::size_t size() const { return probs_.size(); }
  // Probabilities in the order the caller supplied them.
  const std::vector<double>& probs() const { return probs_; }
  double prob(std::size_t user_index) const { return probs_[user_index]; }
  // Probabilities in non-increasing order.
  const std::vector<double>& sorted() const { return sorted_; }
  // Permutation mapping user index -> rank in the descending ordering.
  const std::vector<std::size_t>& order() const { return order_; }
  std::size_t rank_of(std::size_t user_index) const { return order_[user_index]; }
  std::size_t user_of(std::size_t rank) const { return inverse_[rank]; }
  double min_prob() const { return sorted_.back(); }
  bool is_uniform(double tol = 1e-12) const;

 private:
  friend Prior make_prior(std::vector<double> probs);
  std::vector<double> probs_;
  std::vector<double> sorted_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> inverse_;
};

// Validates and normalizes a pmf. Entries must be strictly positive and sum
// to 1 within 1e-9; the stored values are rescaled to sum to exactly 1. Ties
// in the descending ordering keep the user order (stable sort).
Prior make_prior(std::vector<double> probs);

Prior uniform_prior(std::size_t n);

// Row-stochastic conditional kernel P(y_j | x_i), stored row-major. Rows are
// input symbols, columns are outcomes. Not necessarily square: audited
// mechanisms may have any column count.
class Mechanism {
 public:
  Mechanism() = default;
  Mechanism(std::size_t rows, std::size_t cols, std::vector<double> row_major);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<double> column(std::size_t j) const;
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Validating constructors. Entries may carry up to 1e-9 of numerical noise
// outside [0,1] and row sums may deviate up to 1e-9 from 1; noise is clamped
// and rows are renormalized so the result satisfies the exact invariants.
Mechanism make_mechanism(const std::vector<std::vector<double>>& rows);
Mechanism make_mechanism(std::size_t rows, std::size_t cols,
                         std::vector<double> row_major);
Mechanism identity_mechanism(std::size_t n);

// Cached output marginal P(y_j) = sum_i prior_i p_ij.
struct OutputDistribution {
  std::vector<double> probs;
};

OutputDistribution output_distribution(const Mechanism& mech, const Prior& prior);

// Sorts columns into lexicographically descending order. Two mechanisms are
// column-permutation equivalent iff their canonical forms agree entrywise.
Mechanism canonicalize(const Mechanism& mech);
bool equivalent(const Mechanism& a, const Mechanism& b, double tol = 1e-12);

enum class DesignMethod { binary, high_privacy, uniform, lp, oracle };

std::string to_string(DesignMethod method);
DesignMethod design_method_from_string(const std::string& name);

// Result of a mechanism design call: the mechanism, the leakage bound it was
// asked to satisfy, the leakage it actually attains, and its utility score.
struct DesignReport {
  Mechanism mechanism;
  double epsilon_requested = 0.0;
  double epsilon_achieved = 0.0;
  double utility = 0.0;
  DesignMethod method = DesignMethod::lp;
  Prior prior;
};

}  // namespace pml

#endif  // PML_CORE_HPP_
