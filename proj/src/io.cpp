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

#include "pml/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace pml {

nlohmann::json to_json(const Prior& prior) {
  return nlohmann::json{{"probs", prior.probs()}, {"order", prior.order()}};
}

nlohmann::json to_json(const Mechanism& mech) {
  nlohmann::json matrix = nlohmann::json::array();
  for (std::size_t i = 0; i < mech.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < mech.cols(); ++j) row.push_back(mech.at(i, j));
    matrix.push_back(std::move(row));
  }
  return nlohmann::json{{"matrix", std::move(matrix)}};
}

nlohmann::json to_json(const DesignReport& report) {
  return nlohmann::json{{"mechanism", to_json(report.mechanism)},
                        {"epsilon_requested", report.epsilon_requested},
                        {"epsilon_achieved", report.epsilon_achieved},
                        {"utility", report.utility},
                        {"method", to_string(report.method)},
                        {"prior", to_json(report.prior)}};
}

Prior prior_from_json(const nlohmann::json& j) {
  if (!j.contains("probs"))
    fail(errc::invalid_argument, "prior JSON needs a 'probs' array");
  return make_prior(j.at("probs").get<std::vector<double>>());
}

Mechanism mechanism_from_json(const nlohmann::json& j) {
  if (!j.contains("matrix"))
    fail(errc::invalid_argument, "mechanism JSON needs a 'matrix' array");
  return make_mechanism(j.at("matrix").get<std::vector<std::vector<double>>>());
}

Mechanism load_mechanism(const std::string& path) {
  std::ifstream file(path);
  if (!file) fail(errc::invalid_argument, "cannot open '" + path + "'");
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    nlohmann::json j;
    try {
      file >> j;
    } catch (const nlohmann::json::exception& e) {
      fail(errc::invalid_argument, "malformed JSON in '" + path + "': " + e.what());
    }
    return mechanism_from_json(j);
  }
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        fail(errc::invalid_argument, "non-numeric CSV cell '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(errc::invalid_argument, "empty mechanism file");
  return make_mechanism(rows);
}

std::string format_csv_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

Prior parse_prior_list(const std::string& csv) {
  std::vector<double> probs;
  std::stringstream cells(csv);
  std::string cell;
  while (std::getline(cells, cell, ',')) {
    try {
      probs.push_back(std::stod(cell));
    } catch (const std::exception&) {
      fail(errc::invalid_argument, "non-numeric prior entry '" + cell + "'");
    }
  }
  return make_prior(std::move(probs));
}

}  // namespace pml
