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
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pml/closed_form.hpp"
#include "pml/io.hpp"
#include "pml/leakage.hpp"
#include "pml/lp.hpp"
#include "pml/polytope.hpp"
#include "pml/rr.hpp"
#include "pml/simulate.hpp"
#include "pml/utility.hpp"

namespace pml {

namespace {

constexpr double kLn2 = 0.6931471805599453;

bool debug_logging() {
  const char* level = std::getenv("PML_LOG");
  return level != nullptr && std::string(level) == "debug";
}

// Writes to the path when given, otherwise to the primary stream.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) fail(errc::invalid_argument, "cannot write '" + path + "'");
  file << text;
}

double resolve_eps(const Prior& prior, std::optional<double> nats,
                   std::optional<double> frac) {
  if (nats.has_value() == frac.has_value())
    fail(errc::invalid_argument, "give exactly one of --eps-nats / --eps-frac");
  return nats ? *nats : *frac * eps_max(prior);
}

DesignReport dispatch_design(const Prior& prior, double eps,
                             const std::string& method, const ColumnUtility& u) {
  auto finish = [&](Mechanism mech, DesignMethod m) {
    DesignReport report;
    report.mechanism = std::move(mech);
    report.epsilon_requested = eps;
    report.epsilon_achieved = epsilon_m(report.mechanism, prior);
    report.utility = mechanism_utility(u, report.mechanism);
    report.method = m;
    report.prior = prior;
    return report;
  };
  if (method == "auto") return auto_design(prior, eps, u);
  if (method == "binary") return finish(binary_optimal(prior, eps), DesignMethod::binary);
  if (method == "high_privacy")
    return finish(high_privacy_optimal(prior, eps), DesignMethod::high_privacy);
  if (method == "uniform") {
    if (!prior.is_uniform(1e-9))
      fail(errc::bad_alphabet, "the uniform method needs a uniform prior");
    return finish(uniform_optimal(prior.size(), eps), DesignMethod::uniform);
  }
  if (method == "lp") return lp_optimal(prior, eps, u);
  if (method == "oracle") return oracle_optimum(prior, eps, u);
  fail(errc::invalid_argument, "unknown method '" + method + "'");
}

nlohmann::json report_to_json(const DesignReport& report, bool bits) {
  nlohmann::json j = to_json(report);
  j["units"] = bits ? "bits" : "nats";
  if (bits) {
    j["epsilon_requested"] = report.epsilon_requested / kLn2;
    j["epsilon_achieved"] = report.epsilon_achieved / kLn2;
    j["utility"] = report.utility / kLn2;
  }
  return j;
}

nlohmann::json audit_mechanism(const Mechanism& mech, const Prior& prior, bool bits) {
  const double unit = bits ? kLn2 : 1.0;
  const OutputDistribution out_dist = output_distribution(mech, prior);
  const RegionTable regions = region_table(prior);

  nlohmann::json per_outcome = nlohmann::json::array();
  for (std::size_t j = 0; j < mech.cols(); ++j) {
    if (out_dist.probs[j] > 0.0)
      per_outcome.push_back(pml_of_outcome(mech, prior, j) / unit);
    else
      per_outcome.push_back(nullptr);
  }

  const double leakage = epsilon_m(mech, prior);
  const int region = regions.region_of(leakage);

  // Zero counts per column against the number the privacy region permits;
  // a column with z zeros forces the leakage to at least boundary z.
  nlohmann::json zero_counts = nlohmann::json::array();
  double implied_floor = 0.0;
  for (std::size_t j = 0; j < mech.cols(); ++j) {
    if (out_dist.probs[j] <= 0.0) {
      zero_counts.push_back(nullptr);
      continue;
    }
    int zeros = 0;
    for (std::size_t i = 0; i < mech.rows(); ++i)
      if (mech.at(i, j) <= 1e-12) ++zeros;
    zero_counts.push_back(zeros);
    if (zeros >= 1 && zeros <= static_cast<int>(regions.boundaries.size()))
      implied_floor = std::max(implied_floor, regions.boundaries[zeros - 1]);
  }

  nlohmann::json j;
  j["units"] = bits ? "bits" : "nats";
  j["epsilon_m"] = leakage / unit;
  j["epsilon_max"] = regions.eps_max / unit;
  j["region"] = region;
  j["per_outcome_pml"] = std::move(per_outcome);
  j["output_distribution"] = out_dist.probs;
  j["column_zero_counts"] = std::move(zero_counts);
  j["max_zeros_allowed"] = region - 1;
  j["zero_implied_epsilon_floor"] = implied_floor / unit;
  j["zero_floor_consistent"] = leakage >= implied_floor - 1e-9;
  j["utility_mi"] = mechanism_utility(mi_utility(prior), mech) / unit;
  j["utility_tv"] = mechanism_utility(tv_utility(prior), mech);
  return j;
}

std::vector<double> grid_points(const Prior& prior, double start, double stop,
                                double step, bool frac) {
  EpsGrid grid;
  const double unit = frac ? eps_max(prior) : 1.0;
  grid.start = start * unit;
  grid.stop = stop * unit;
  grid.step = step * unit;
  return grid.points();
}

SimulationConfig config_from_json(const nlohmann::json& j) {
  SimulationConfig config;
  config.prior = make_prior(j.at("prior").get<std::vector<double>>());
  const bool frac = j.value("frac", false);
  const double unit = frac ? eps_max(config.prior) : 1.0;
  config.grid.start = j.at("eps_start").get<double>() * unit;
  config.grid.stop = j.at("eps_stop").get<double>() * unit;
  config.grid.step = j.at("eps_step").get<double>() * unit;
  config.samples_per_trial = j.value("samples", 1000);
  config.trials = j.value("trials", 10);
  config.seed = j.value("seed", static_cast<std::uint64_t>(0));
  if (j.contains("estimators")) {
    config.estimators.clear();
    for (const auto& name : j.at("estimators"))
      config.estimators.push_back(sim_estimator_from_string(name.get<std::string>()));
  }
  if (j.contains("methods")) {
    config.methods.clear();
    for (const auto& name : j.at("methods"))
      config.methods.push_back(sim_method_from_string(name.get<std::string>()));
  }
  return config;
}

std::string simulation_csv(const std::vector<SimRow>& rows) {
  std::ostringstream csv;
  csv << "eps,trial,method,estimator,value\n";
  for (const SimRow& row : rows) {
    csv << format_csv_double(row.eps) << ',' << row.trial << ','
        << to_string(row.method) << ',' << to_string(row.estimator) << ','
        << (row.value ? format_csv_double(*row.value) : "NA") << '\n';
  }
  return csv.str();
}

std::string compare_csv(const std::vector<CompareRow>& rows, bool bits) {
  const double unit = bits ? kLn2 : 1.0;
  std::ostringstream csv;
  csv << "eps,utility_pml_optimal,utility_rr_calibrated\n";
  for (const CompareRow& row : rows) {
    csv << format_csv_double(row.eps / unit) << ','
        << format_csv_double(row.utility_pml_optimal / unit) << ','
        << format_csv_double(row.utility_rr_calibrated / unit) << '\n';
  }
  return csv.str();
}

// Exit code 3 is reserved for method preconditions the inputs fail to meet.
bool is_precondition_error(errc code) {
  return code == errc::not_high_privacy || code == errc::bad_alphabet ||
         code == errc::too_large;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Design and audit of discrete privacy mechanisms under "
               "per-outcome leakage bounds"};
  app.require_subcommand(1);

  // design
  auto* design = app.add_subcommand("design", "Design a leakage-optimal mechanism");
  std::string design_prior, design_method = "auto", design_utility = "mi";
  std::string design_output;
  std::optional<double> design_eps_nats, design_eps_frac;
  bool design_bits = false;
  design->add_option("--prior", design_prior, "Comma-separated prior")->required();
  design->add_option("--eps-nats", design_eps_nats, "Leakage bound in nats");
  design->add_option("--eps-frac", design_eps_frac, "Leakage bound as a fraction of eps_max");
  design->add_option("--method", design_method,
                     "auto|binary|high_privacy|uniform|lp|oracle");
  design->add_option("--utility", design_utility, "mi|tv");
  design->add_flag("--bits", design_bits, "Report leakages and utility in bits");
  design->add_option("-o,--output", design_output, "Write JSON here instead of stdout");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Audit a mechanism file");
  std::string eval_mechanism, eval_prior, eval_output;
  bool eval_bits = false;
  evaluate->add_option("--mechanism", eval_mechanism, "Mechanism JSON or CSV file")
      ->required();
  evaluate->add_option("--prior", eval_prior, "Comma-separated prior")->required();
  evaluate->add_flag("--bits", eval_bits, "Report leakages in bits");
  evaluate->add_option("-o,--output", eval_output, "Write JSON here instead of stdout");

  // compare
  auto* compare = app.add_subcommand(
      "compare", "Exact utility of the optimal mechanism vs calibrated randomized response");
  std::string cmp_prior, cmp_utility = "mi", cmp_output;
  double cmp_start = 0.0, cmp_stop = 0.0, cmp_step = 0.0;
  bool cmp_frac = false, cmp_bits = false;
  compare->add_option("--prior", cmp_prior, "Comma-separated prior")->required();
  compare->add_option("--eps-start", cmp_start, "Grid start")->required();
  compare->add_option("--eps-stop", cmp_stop, "Grid stop (inclusive)")->required();
  compare->add_option("--eps-step", cmp_step, "Grid step")->required();
  compare->add_flag("--frac", cmp_frac, "Grid values are fractions of eps_max");
  compare->add_option("--utility", cmp_utility, "mi|tv");
  compare->add_flag("--bits", cmp_bits, "Report utilities in bits");
  compare->add_option("-o,--output", cmp_output, "Write CSV here instead of stdout");

  // simulate
  auto* simulate = app.add_subcommand(
      "simulate", "Seeded synthetic-data runs scored with empirical estimators");
  std::string sim_prior, sim_config, sim_output;
  std::string sim_estimators = "empirical_mi,pearson";
  std::string sim_methods = "pml_optimal,randomized_response";
  double sim_start = 0.0, sim_stop = 0.0, sim_step = 0.0;
  bool sim_frac = false;
  int sim_samples = 1000, sim_trials = 10;
  std::uint64_t sim_seed = 0;
  simulate->add_option("--config", sim_config, "JSON config file (overrides flags)");
  simulate->add_option("--prior", sim_prior, "Comma-separated prior");
  simulate->add_option("--eps-start", sim_start, "Grid start");
  simulate->add_option("--eps-stop", sim_stop, "Grid stop (inclusive)");
  simulate->add_option("--eps-step", sim_step, "Grid step");
  simulate->add_flag("--frac", sim_frac, "Grid values are fractions of eps_max");
  simulate->add_option("--samples", sim_samples, "Samples per trial");
  simulate->add_option("--trials", sim_trials, "Trial count");
  simulate->add_option("--seed", sim_seed, "Base seed; trial t uses seed + t");
  simulate->add_option("--estimators", sim_estimators, "Subset of empirical_mi,pearson");
  simulate->add_option("--methods", sim_methods,
                       "Subset of pml_optimal,randomized_response");
  simulate->add_option("-o,--output", sim_output, "Write CSV here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (design->parsed()) {
      const Prior prior = parse_prior_list(design_prior);
      const double eps = resolve_eps(prior, design_eps_nats, design_eps_frac);
      const ColumnUtility u{utility_kind_from_string(design_utility), prior};
      if (debug_logging())
        err << "design: N=" << prior.size() << " eps=" << eps
            << " method=" << design_method << "\n";
      const DesignReport report = dispatch_design(prior, eps, design_method, u);
      emit(report_to_json(report, design_bits).dump(2) + "\n", design_output, out);
    } else if (evaluate->parsed()) {
      const Prior prior = parse_prior_list(eval_prior);
      const Mechanism mech = load_mechanism(eval_mechanism);
      emit(audit_mechanism(mech, prior, eval_bits).dump(2) + "\n", eval_output, out);
    } else if (compare->parsed()) {
      const Prior prior = parse_prior_list(cmp_prior);
      const auto grid = grid_points(prior, cmp_start, cmp_stop, cmp_step, cmp_frac);
      const auto rows = run_compare(prior, grid, utility_kind_from_string(cmp_utility));
      emit(compare_csv(rows, cmp_bits), cmp_output, out);
    } else if (simulate->parsed()) {
      SimulationConfig config;
      if (!sim_config.empty()) {
        std::ifstream file(sim_config);
        if (!file) fail(errc::invalid_argument, "cannot open '" + sim_config + "'");
        nlohmann::json j;
        try {
          file >> j;
        } catch (const nlohmann::json::exception& e) {
          fail(errc::invalid_argument, std::string("malformed config: ") + e.what());
        }
        config = config_from_json(j);
      } else {
        if (sim_prior.empty())
          fail(errc::invalid_argument, "simulate needs --prior or --config");
        config.prior = parse_prior_list(sim_prior);
        const double unit = sim_frac ? eps_max(config.prior) : 1.0;
        config.grid = EpsGrid{sim_start * unit, sim_stop * unit, sim_step * unit};
        config.samples_per_trial = sim_samples;
        config.trials = sim_trials;
        config.seed = sim_seed;
        config.estimators.clear();
        std::stringstream est(sim_estimators);
        for (std::string name; std::getline(est, name, ',');)
          config.estimators.push_back(sim_estimator_from_string(name));
        config.methods.clear();
        std::stringstream met(sim_methods);
        for (std::string name; std::getline(met, name, ',');)
          config.methods.push_back(sim_method_from_string(name));
      }
      emit(simulation_csv(run_simulation(config)), sim_output, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return design->parsed() && is_precondition_error(e.code()) ? 3 : 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace pml
