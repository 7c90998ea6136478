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

#include "pml/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pml {

namespace {
constexpr double kInputSumTol = 1e-9;
constexpr double kEntryNoiseTol = 1e-9;
}  // namespace

const char* errc_name(errc code) {
  switch (code) {
    case errc::zero_mass_symbol: return "ZeroMassSymbol";
    case errc::not_normalized: return "NotNormalized";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::zero_probability_outcome: return "ZeroProbabilityOutcome";
    case errc::bad_alphabet: return "BadAlphabet";
    case errc::negative_epsilon: return "NegativeEpsilon";
    case errc::epsilon_out_of_range: return "EpsilonOutOfRange";
    case errc::not_high_privacy: return "NotHighPrivacy";
    case errc::too_large: return "TooLarge";
    case errc::lift_not_normalized: return "LiftNotNormalized";
    case errc::inconsistent_weights: return "InconsistentWeights";
    case errc::empty_sample: return "EmptySample";
    case errc::degenerate_variance: return "DegenerateVariance";
    case errc::infeasible: return "Infeasible";
    case errc::unbounded: return "Unbounded";
    case errc::negative_entry: return "NegativeEntry";
    case errc::not_row_stochastic: return "NotRowStochastic";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

void fail(errc code, const std::string& message) { throw Error(code, message); }

bool Prior::is_uniform(double tol) const {
  return sorted_.front() - sorted_.back() <= tol;
}

Prior make_prior(std::vector<double> probs) {
  if (probs.empty()) fail(errc::invalid_argument, "prior must be non-empty");
  double sum = 0.0;
  for (double p : probs) {
    if (!(p > 0.0)) fail(errc::zero_mass_symbol, "prior entries must be > 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kInputSumTol)
    fail(errc::not_normalized, "prior entries must sum to 1 within 1e-9");
  for (double& p : probs) p /= sum;

  const std::size_t n = probs.size();
  std::vector<std::size_t> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), std::size_t{0});
  std::stable_sort(by_rank.begin(), by_rank.end(),
                   [&](std::size_t a, std::size_t b) { return probs[a] > probs[b]; });

  Prior prior;
  prior.probs_ = std::move(probs);
  prior.inverse_ = by_rank;
  prior.order_.resize(n);
  prior.sorted_.resize(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    prior.order_[by_rank[rank]] = rank;
    prior.sorted_[rank] = prior.probs_[by_rank[rank]];
  }
  return prior;
}

Prior uniform_prior(std::size_t n) {
  return make_prior(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Mechanism::Mechanism(std::size_t rows, std::size_t cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {}

std::vector<double> Mechanism::column(std::size_t j) const {
  std::vector<double> col(rows_);
  for (std::size_t i = 0; i < rows_; ++i) col[i] = at(i, j);
  return col;
}

Mechanism make_mechanism(std::size_t rows, std::size_t cols,
                         std::vector<double> row_major) {
  if (rows == 0 || cols == 0 || row_major.size() != rows * cols)
    fail(errc::dimension_mismatch, "mechanism shape does not match data");
  for (double& p : row_major) {
    if (p < -kEntryNoiseTol)
      fail(errc::negative_entry, "mechanism entry below 0 beyond tolerance");
    if (p > 1.0 + kEntryNoiseTol)
      fail(errc::not_row_stochastic, "mechanism entry above 1 beyond tolerance");
    p = std::clamp(p, 0.0, 1.0);
  }
  for (std::size_t i = 0; i < rows; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < cols; ++j) sum += row_major[i * cols + j];
    if (std::abs(sum - 1.0) > kEntryNoiseTol * static_cast<double>(cols))
      fail(errc::not_row_stochastic, "row " + std::to_string(i) +
                                         " sums to " + std::to_string(sum));
    if (std::abs(sum - 1.0) > 1e-13) {
      for (std::size_t j = 0; j < cols; ++j) row_major[i * cols + j] /= sum;
    }
  }
  return Mechanism(rows, cols, std::move(row_major));
}

Mechanism make_mechanism(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) fail(errc::dimension_mismatch, "mechanism has no rows");
  const std::size_t cols = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols)
      fail(errc::dimension_mismatch, "mechanism rows have unequal length");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make_mechanism(rows.size(), cols, std::move(flat));
}

Mechanism identity_mechanism(std::size_t n) {
  std::vector<double> flat(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) flat[i * n + i] = 1.0;
  return Mechanism(n, n, std::move(flat));
}

OutputDistribution output_distribution(const Mechanism& mech, const Prior& prior) {
  if (mech.rows() != prior.size())
    fail(errc::dimension_mismatch, "mechanism rows must match prior size");
  OutputDistribution out;
  out.probs.assign(mech.cols(), 0.0);
  for (std::size_t i = 0; i < mech.rows(); ++i) {
    const double pi = prior.prob(i);
    auto row = mech.row(i);
    for (std::size_t j = 0; j < mech.cols(); ++j) out.probs[j] += pi * row[j];
  }
  return out;
}

Mechanism canonicalize(const Mechanism& mech) {
  std::vector<std::size_t> cols(mech.cols());
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  std::sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < mech.rows(); ++i) {
      const double va = mech.at(i, a);
      const double vb = mech.at(i, b);
      if (va != vb) return va > vb;
    }
    return false;
  });
  std::vector<double> flat(mech.rows() * mech.cols());
  for (std::size_t j = 0; j < mech.cols(); ++j)
    for (std::size_t i = 0; i < mech.rows(); ++i)
      flat[i * mech.cols() + j] = mech.at(i, cols[j]);
  return Mechanism(mech.rows(), mech.cols(), std::move(flat));
}

bool equivalent(const Mechanism& a, const Mechanism& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const Mechanism ca = canonicalize(a);
  const Mechanism cb = canonicalize(b);
  for (std::size_t k = 0; k < ca.data().size(); ++k)
    if (std::abs(ca.data()[k] - cb.data()[k]) > tol) return false;
  return true;
}

std::string to_string(DesignMethod method) {
  switch (method) {
    case DesignMethod::binary: return "binary";
    case DesignMethod::high_privacy: return "high_privacy";
    case DesignMethod::uniform: return "uniform";
    case DesignMethod::lp: return "lp";
    case DesignMethod::oracle: return "oracle";
  }
  return "unknown";
}

DesignMethod design_method_from_string(const std::string& name) {
  if (name == "binary") return DesignMethod::binary;
  if (name == "high_privacy") return DesignMethod::high_privacy;
  if (name == "uniform") return DesignMethod::uniform;
  if (name == "lp") return DesignMethod::lp;
  if (name == "oracle") return DesignMethod::oracle;
  fail(errc::invalid_argument, "unknown design method '" + name + "'");
}

}  // namespace pml
