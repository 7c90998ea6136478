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

#include "pml/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "pml/io.hpp"
#include "pml/rr.hpp"

using namespace pml;

namespace {

struct CliRun {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliRun invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun run;
  run.exit_code = run_cli(args, out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

// RAII temp file under the build tree.
struct TempFile {
  explicit TempFile(const std::string& name, const std::string& content)
      : path("cli_test_" + name) {
    std::ofstream file(path);
    file << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
  std::string path;
};

}  // namespace

TEST_CASE("design reproduces the high-privacy example") {
  const CliRun run = invoke({"design", "--prior", "0.4,0.2,0.2,0.2", "--eps-nats",
                             "0.117783035656384", "--method", "high_privacy"});
  REQUIRE(run.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(run.out);
  const std::vector<std::vector<double>> want = {{0.325, 0.225, 0.225, 0.225},
                                                 {0.45, 0.1, 0.225, 0.225},
                                                 {0.45, 0.225, 0.1, 0.225},
                                                 {0.45, 0.225, 0.225, 0.1}};
  const auto got = j.at("mechanism").at("matrix").get<std::vector<std::vector<double>>>();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t c = 0; c < 4; ++c)
      CHECK(std::abs(got[i][c] - want[i][c]) < 1e-10);
  CHECK(j.at("method") == "high_privacy");
  CHECK(j.at("units") == "nats");
}

TEST_CASE("design with the uniform method and eps-frac") {
  const CliRun run = invoke({"design", "--prior", "0.25,0.25,0.25,0.25",
                             "--eps-frac", "0.7924812503605781", "--method",
                             "uniform"});
  REQUIRE(run.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(run.out);
  // 0.79248... * log 4 = log 3.
  CHECK(std::abs(j.at("epsilon_requested").get<double>() - std::log(3.0)) < 1e-12);
  CHECK(std::abs(j.at("epsilon_achieved").get<double>() - std::log(3.0)) < 1e-9);
}

TEST_CASE("design at zero leakage gives zero utility") {
  const CliRun run =
      invoke({"design", "--prior", "0.5,0.5", "--eps-nats", "0"});
  REQUIRE(run.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(run.out);
  CHECK(std::abs(j.at("utility").get<double>()) < 1e-12);
  const auto matrix = j.at("mechanism").at("matrix").get<std::vector<std::vector<double>>>();
  CHECK(std::abs(matrix[0][0] - matrix[1][0]) < 1e-12);
}

TEST_CASE("design exit codes") {
  CHECK(invoke({"design", "--prior", "0.5,0.6", "--eps-nats", "0.1"}).exit_code == 2);
  CHECK(invoke({"design", "--prior", "0.5,0.5", "--eps-nats", "-1"}).exit_code == 2);
  CHECK(invoke({"design", "--prior", "0.5,0.5"}).exit_code == 2);
  CHECK(invoke({"design", "--prior", "0.5,0.5", "--eps-nats", "0.1",
                "--eps-frac", "0.5"}).exit_code == 2);
  // Method preconditions: exit 3.
  CHECK(invoke({"design", "--prior", "0.5,0.3,0.2", "--eps-nats", "0.5",
                "--method", "high_privacy"}).exit_code == 3);
  CHECK(invoke({"design", "--prior", "0.5,0.3,0.2", "--eps-nats", "0.1",
                "--method", "binary"}).exit_code == 3);
  CHECK(invoke({"design", "--prior", "0.5,0.3,0.2", "--eps-nats", "0.1",
                "--method", "uniform"}).exit_code == 3);
  const std::string big = "0.2,0.2,0.2,0.2,0.1,0.1";
  CHECK(invoke({"design", "--prior", big, "--eps-nats", "0.1", "--method",
                "oracle"}).exit_code == 3);
}

TEST_CASE("design --bits rescales the reported numbers") {
  const CliRun nats = invoke({"design", "--prior", "0.5,0.5", "--eps-nats", "0.3"});
  const CliRun bits =
      invoke({"design", "--prior", "0.5,0.5", "--eps-nats", "0.3", "--bits"});
  const nlohmann::json jn = nlohmann::json::parse(nats.out);
  const nlohmann::json jb = nlohmann::json::parse(bits.out);
  CHECK(jb.at("units") == "bits");
  CHECK(std::abs(jb.at("utility").get<double>() * std::log(2.0) -
                 jn.at("utility").get<double>()) < 1e-12);
}

TEST_CASE("evaluate audits mechanism files") {
  SUBCASE("identity CSV at a uniform prior") {
    TempFile file("identity.csv", "1,0,0\n0,1,0\n0,0,1\n");
    const CliRun run = invoke({"evaluate", "--mechanism", file.path, "--prior",
                               "0.333333333,0.333333333,0.333333334"});
    REQUIRE(run.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(run.out);
    CHECK(std::abs(j.at("epsilon_m").get<double>() - std::log(3.0)) < 1e-7);
    CHECK(std::abs(j.at("epsilon_m").get<double>() -
                   j.at("epsilon_max").get<double>()) < 1e-7);
    CHECK(j.at("zero_floor_consistent").get<bool>());
  }
  SUBCASE("randomized response JSON leaks log(3/2) everywhere") {
    const Mechanism rr = randomized_response(3, std::log(2.0));
    TempFile file("rr.json", to_json(rr).dump());
    const CliRun run = invoke({"evaluate", "--mechanism", file.path, "--prior",
                               "0.333333333,0.333333333,0.333333334"});
    REQUIRE(run.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(run.out);
    for (const auto& value : j.at("per_outcome_pml"))
      CHECK(std::abs(value.get<double>() - std::log(1.5)) < 1e-7);
  }
  SUBCASE("high-privacy example file") {
    TempFile file("example.csv",
                  "0.325,0.225,0.225,0.225\n0.45,0.1,0.225,0.225\n"
                  "0.45,0.225,0.1,0.225\n0.45,0.225,0.225,0.1\n");
    const CliRun run = invoke(
        {"evaluate", "--mechanism", file.path, "--prior", "0.4,0.2,0.2,0.2"});
    REQUIRE(run.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(run.out);
    CHECK(std::abs(j.at("epsilon_m").get<double>() - std::log(9.0 / 8.0)) < 1e-10);
    CHECK(j.at("region").get<int>() == 1);
  }
  SUBCASE("malformed matrices exit 2") {
    TempFile file("broken.csv", "0.5,0.4\n0.5,0.5\n");
    CHECK(invoke({"evaluate", "--mechanism", file.path, "--prior", "0.5,0.5"})
              .exit_code == 2);
    TempFile negative("negative.csv", "1.2,-0.2\n0.5,0.5\n");
    CHECK(invoke({"evaluate", "--mechanism", negative.path, "--prior", "0.5,0.5"})
              .exit_code == 2);
    CHECK(invoke({"evaluate", "--mechanism", "no_such_file.csv", "--prior",
                  "0.5,0.5"}).exit_code == 2);
  }
}

TEST_CASE("compare emits a dominating CSV") {
  const CliRun run = invoke({"compare", "--prior", "0.5,0.3,0.2", "--eps-start",
                             "0", "--eps-stop", "0.9", "--eps-step", "0.1",
                             "--frac"});
  REQUIRE(run.exit_code == 0);
  std::istringstream csv(run.out);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "eps,utility_pml_optimal,utility_rr_calibrated");
  std::string line;
  std::size_t rows = 0;
  while (std::getline(csv, line)) {
    double eps, pml, rr;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &eps, &pml, &rr) == 3);
    CHECK(pml >= rr - 1e-9);
    ++rows;
  }
  CHECK(rows == 10);

  CHECK(invoke({"compare", "--prior", "0.5,0.5", "--eps-start", "0",
                "--eps-stop", "1.0", "--eps-step", "0.1", "--frac"})
            .exit_code == 2);
}

TEST_CASE("simulate is byte-deterministic and supports config files") {
  const std::vector<std::string> args = {
      "simulate", "--prior", "0.55,0.45", "--eps-start", "0.1",  "--eps-stop",
      "0.5",      "--eps-step", "0.2",    "--samples",   "100", "--trials",
      "2",        "--seed",  "11"};
  const CliRun a = invoke(args);
  const CliRun b = invoke(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("eps,trial,method,estimator,value\n", 0) == 0);

  const nlohmann::json config = {
      {"prior", {0.55, 0.45}}, {"eps_start", 0.1}, {"eps_stop", 0.5},
      {"eps_step", 0.2},       {"samples", 100},   {"trials", 2},
      {"seed", 11}};
  TempFile file("config.json", config.dump());
  const CliRun via_config = invoke({"simulate", "--config", file.path});
  REQUIRE(via_config.exit_code == 0);
  CHECK(via_config.out == a.out);

  // n = 1 emits NA for the degenerate correlation.
  const CliRun tiny = invoke({"simulate", "--prior", "0.55,0.45", "--eps-start",
                              "0.1", "--eps-stop", "0.1", "--eps-step", "0.1",
                              "--samples", "1", "--trials", "1", "--seed", "3"});
  REQUIRE(tiny.exit_code == 0);
  CHECK(tiny.out.find(",pearson,NA") != std::string::npos);

  CHECK(invoke({"simulate", "--prior", "0.55,0.45", "--eps-start", "0.1",
                "--eps-stop", "0.9", "--eps-step", "0.1", "--samples", "0"})
            .exit_code == 2);
}

TEST_CASE("output goes to a file when requested") {
  TempFile sink("sink.json", "");
  const CliRun run = invoke({"design", "--prior", "0.5,0.5", "--eps-nats", "0.2",
                             "-o", sink.path});
  REQUIRE(run.exit_code == 0);
  CHECK(run.out.empty());
  std::ifstream file(sink.path);
  nlohmann::json j;
  file >> j;
  CHECK(j.contains("mechanism"));
}

TEST_CASE("designed mechanisms pass their own audit") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"0.55,0.45", "0.4"}, {"0.5,0.3,0.2", "0.15"}, {"0.5,0.3,0.2", "0.5"},
      {"0.25,0.25,0.25,0.25", "0.9"}};
  for (const auto& [prior_csv, eps] : cases) {
    const CliRun design =
        invoke({"design", "--prior", prior_csv, "--eps-nats", eps});
    REQUIRE(design.exit_code == 0);
    const nlohmann::json report = nlohmann::json::parse(design.out);
    TempFile file("roundtrip.json", report.at("mechanism").dump());
    const CliRun audit =
        invoke({"evaluate", "--mechanism", file.path, "--prior", prior_csv});
    REQUIRE(audit.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(audit.out);
    CHECK(j.at("epsilon_m").get<double>() <= std::stod(eps) + 1e-9);
    CHECK(j.at("zero_floor_consistent").get<bool>());
  }
}

TEST_CASE("evaluate --bits divides leakages by log 2") {
  TempFile file("identity2.csv", "1,0\n0,1\n");
  const CliRun nats =
      invoke({"evaluate", "--mechanism", file.path, "--prior", "0.5,0.5"});
  const CliRun bits = invoke(
      {"evaluate", "--mechanism", file.path, "--prior", "0.5,0.5", "--bits"});
  const double in_nats =
      nlohmann::json::parse(nats.out).at("epsilon_m").get<double>();
  const double in_bits =
      nlohmann::json::parse(bits.out).at("epsilon_m").get<double>();
  CHECK(std::abs(in_nats - std::log(2.0)) < 1e-12);
  CHECK(std::abs(in_bits - 1.0) < 1e-12);
}

TEST_CASE("json round trips") {
  const Prior prior = make_prior({0.4, 0.2, 0.2, 0.2});
  const Prior prior_again = prior_from_json(to_json(prior));
  CHECK(prior_again.probs() == prior.probs());
  CHECK(prior_again.order() == prior.order());

  const Mechanism mech = randomized_response(3, 0.8);
  const Mechanism mech_again = mechanism_from_json(to_json(mech));
  CHECK(mech_again.data() == mech.data());
}

TEST_CASE("help exits cleanly") {
  CHECK(invoke({"--help"}).exit_code == 0);
  CHECK(invoke({}).exit_code == 2);
  CHECK(invoke({"frobnicate"}).exit_code == 2);
}
