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

#ifndef PML_IO_HPP_
#define PML_IO_HPP_

#include <string>

#include <json.hpp>

#include "pml/core.hpp"

namespace pml {

// JSON shapes: Prior {"probs": [...], "order": [...]},
// Mechanism {"matrix": [[row 0], [row 1], ...]} (row-major),
// DesignReport {"mechanism", "epsilon_requested", "epsilon_achieved",
//               "utility", "method", "prior"}.
nlohmann::json to_json(const Prior& prior);
nlohmann::json to_json(const Mechanism& mech);
nlohmann::json to_json(const DesignReport& report);

Prior prior_from_json(const nlohmann::json& j);
Mechanism mechanism_from_json(const nlohmann::json& j);

// Loads a mechanism from a .json file or a plain CSV of matrix rows.
Mechanism load_mechanism(const std::string& path);

// Floats in CSV output carry 12 significant digits.
std::string format_csv_double(double value);

// Parses "0.4,0.2,0.2,0.2" into a validated prior.
Prior parse_prior_list(const std::string& csv);

}  // namespace pml

#endif  // PML_IO_HPP_
