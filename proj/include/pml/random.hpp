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

#ifndef PML_RANDOM_HPP_
#define PML_RANDOM_HPP_

#include <cstdint>
#include <span>

namespace pml {

// SplitMix64: a fixed, platform-independent 64-bit generator, so seeded runs
// reproduce bit-identically everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// Inverse-CDF draw from a pmf: the first index whose cumulative mass exceeds u.
inline std::size_t sample_index(std::span<const double> pmf, double u) {
  double cumulative = 0.0;
  for (std::size_t i = 0; i + 1 < pmf.size(); ++i) {
    cumulative += pmf[i];
    if (u < cumulative) return i;
  }
  return pmf.size() - 1;
}

}  // namespace pml

#endif  // PML_RANDOM_HPP_
