// Copyright 2026 The gwass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Command-line front end. Exit status: 0 success, 1 a check failed,
// 2 usage, parse or input error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gwass/dynamics.hpp"
#include "gwass/gw.hpp"
#include "gwass/lab/config.hpp"
#include "gwass/lab/io.hpp"
#include "gwass/lab/report.hpp"
#include "gwass/lab/suites.hpp"
#include "gwass/transport.hpp"

namespace fs = std::filesystem;
using namespace gwass;
using lab::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    lab::write_json_file(out, j);
  }
}

void warn(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

struct PairArgs {
  std::string mu, nu, out;
  GwParams params;
};

void add_pair(CLI::App* cmd, PairArgs& args) {
  cmd->add_option("mu", args.mu, "first measure (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("nu", args.nu, "second measure (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("-o,--out", args.out, "write JSON here instead of stdout");
}

void add_params(CLI::App* cmd, GwParams& params) {
  cmd->add_option("--a", params.a, "removal cost per unit mass")->capture_default_str();
  cmd->add_option("--b", params.b, "transport cost multiplier")->capture_default_str();
  cmd->add_option("--p", params.p, "Wasserstein exponent")->capture_default_str();
}

int run_dist(const PairArgs& args) {
  const auto mu = lab::read_measure_file(args.mu);
  const auto nu = lab::read_measure_file(args.nu);
  const GwResult r = gw_distance(mu, nu, args.params);
  if (args.params.p != 1.0 && r.max_arc_length() > 2.0 * args.params.a / args.params.b + 1e-9) {
    std::cerr << "note: optimal plan moves mass farther than 2a/b\n";
  }
  emit(lab::gw_result_to_json(r, args.params), args.out);
  return kOk;
}

int run_wasserstein(const PairArgs& args, double tol) {
  const auto mu = lab::read_measure_file(args.mu);
  const auto nu = lab::read_measure_file(args.nu);
  const WpResult r = wasserstein(mu, nu, args.params.p, tol);
  emit(lab::wp_result_to_json(r), args.out);
  return r.certificate.certifies(1e-9) ? kOk : kCheckFailed;
}

int run_oracle(const PairArgs& args, int grid) {
  const auto mu = lab::read_measure_file(args.mu);
  const auto nu = lab::read_measure_file(args.nu);
  const double solver = gw_distance(mu, nu, args.params).value;
  const double oracle = gw_brute_force(mu, nu, args.params, grid);
  const double bound = gw_brute_force_bound(mu, nu, args.params, grid);
  const bool ok = solver <= oracle + 1e-9 && oracle - solver <= bound + 1e-9;
  emit({{"solver", solver}, {"oracle", oracle}, {"grid_steps", grid},
        {"grid_bound", bound}, {"consistent", ok}},
       args.out);
  return ok ? kOk : kCheckFailed;
}

int run_prokhorov(const PairArgs& args) {
  const auto mu = lab::read_measure_file(args.mu);
  const auto nu = lab::read_measure_file(args.nu);
  emit({{"levy_prokhorov", levy_prokhorov_1d(mu, nu)},
        {"gw", gw_distance(mu, nu, args.params).value},
        {"params", {{"a", args.params.a}, {"b", args.params.b}, {"p", args.params.p}}}},
       args.out);
  return kOk;
}

json constants_json(const HypothesisConstants& c) {
  return {{"L", c.L}, {"M", c.M}, {"N", c.N},   {"P", c.P},   {"R", c.R},
          {"Q", c.Q}, {"m", c.m}, {"C1", c.C1}, {"C2", c.C2}};
}

int run_simulate(const std::string& config_path, const std::string& out_dir) {
  const lab::SimulationConfig cfg = lab::load_simulation_config(config_path);
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  bool ok = true;

  const Trajectory traj =
      sample_and_hold(cfg.mu0, cfg.field, cfg.source, cfg.T, cfg.level, cfg.flow, cfg.scheme);
  warn(traj.warnings);
  char name[64];
  for (std::size_t n = 0; n < traj.snapshots.size(); ++n) {
    std::snprintf(name, sizeof name, "snapshot_%04zu.json", n);
    json j = lab::measure_to_json(traj.snapshots[n].mu);
    j["t"] = traj.snapshots[n].t;
    lab::write_json_file(dir / name, j);
  }
  const double m0 = total_mass(cfg.mu0);
  double worst_mass = 0.0;
  {
    lab::CsvWriter mass(dir / "mass.csv", {"t", "mass", "bound"});
    for (const auto& s : traj.snapshots) {
      const double bound = m0 + s.t * traj.constants.P;
      mass.row({s.t, total_mass(s.mu), bound});
      worst_mass = std::max(worst_mass, total_mass(s.mu) - bound);
    }
  }
  const bool mass_ok = worst_mass <= 1e-12;
  ok = ok && mass_ok;

  json summary = {
      {"T", cfg.T},
      {"level", cfg.level},
      {"snapshots", traj.snapshots.size()},
      {"params", {{"a", cfg.params.a}, {"b", cfg.params.b}, {"p", cfg.params.p}}},
      {"constants", constants_json(traj.constants)},
      {"initial_mass", m0},
      {"final_mass", total_mass(traj.snapshots.back().mu)},
      {"mass_audit", {{"worst_excess", worst_mass}, {"pass", mass_ok}}},
      {"warnings", traj.warnings}};

  if (cfg.levels) {
    const CauchyTable table =
        cauchy_table(cfg.mu0, cfg.field, cfg.source, cfg.T, cfg.levels->first,
                     cfg.levels->second, cfg.params, cfg.flow, cfg.scheme);
    lab::CsvWriter csv(dir / "cauchy.csv", {"k", "D", "bound", "worst_time"});
    bool within = true;
    json rows = json::array();
    for (const auto& row : table.rows) {
      csv.row({static_cast<double>(row.level), row.D, row.bound, row.worst_time});
      within = within && row.D <= row.bound;
      rows.push_back({{"k", row.level}, {"D", row.D}, {"bound", row.bound}});
    }
    ok = ok && within;
    summary["cauchy"] = {{"rows", rows}, {"log2_slope", table.slope}, {"within_bound", within}};
  }
  if (cfg.nu0) {
    const DependenceTable dep = continuous_dependence_check(
        cfg.mu0, *cfg.nu0, cfg.field, cfg.source, cfg.T, cfg.level, cfg.params, cfg.flow,
        cfg.scheme);
    lab::CsvWriter csv(dir / "dependence.csv", {"t", "distance", "bound"});
    bool within = true;
    for (const auto& row : dep.rows) {
      csv.row({row.t, row.distance, row.bound});
      within = within && row.distance <= row.bound + 1e-9;
    }
    ok = ok && within;
    summary["dependence"] = {{"rate", dep.rate}, {"within_bound", within}};
  }
  summary["pass"] = ok;
  lab::write_json_file(dir / "summary.json", summary);
  std::cout << summary.dump(2) << '\n';
  return ok ? kOk : kCheckFailed;
}

int run_verify(std::vector<std::string> suites, std::uint64_t seed, const std::string& json_out,
               bool timing) {
  if (suites.size() == 1 && suites[0] == "all") suites = lab::suite_names();
  for (const auto& s : suites) {
    if (std::find(lab::suite_names().begin(), lab::suite_names().end(), s) ==
        lab::suite_names().end()) {
      throw lab::UnknownSuite(s);
    }
  }
  bool ok = true;
  json reports = json::array();
  for (const auto& s : suites) {
    const lab::SuiteReport r = lab::run_suite(s, seed);
    lab::print_report(json_out == "-" ? std::cerr : std::cout, r);
    ok = ok && r.pass();
    reports.push_back(lab::report_to_json(r, timing));
  }
  if (!json_out.empty()) {
    emit(reports.size() == 1 ? reports[0] : json{{"suites", reports}, {"pass", ok}}, json_out);
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Wasserstein distances and transport-equation schemes"};
  app.require_subcommand(1);

  PairArgs pair;
  double tol = 1e-9;
  int grid = 50;
  auto* dist = app.add_subcommand("dist", "generalized Wasserstein distance with witness");
  add_pair(dist, pair);
  add_params(dist, pair.params);

  auto* wass = app.add_subcommand("wasserstein", "exact W_p between equal-mass measures");
  add_pair(wass, pair);
  wass->add_option("--p", pair.params.p, "Wasserstein exponent")->capture_default_str();
  wass->add_option("--tol", tol, "allowed mass difference")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "compare the solver with a grid search");
  add_pair(oracle, pair);
  add_params(oracle, pair.params);
  oracle->add_option("--grid", grid, "grid steps (<= 50)")->capture_default_str();

  PairArgs lp;
  lp.params = {0.5, 1.0, 1.0};
  auto* prok = app.add_subcommand("prokhorov", "Levy-Prokhorov distance on the line");
  add_pair(prok, lp);
  add_params(prok, lp.params);

  std::string config, out_dir = "simulation";
  auto* sim = app.add_subcommand("simulate", "run the sample-and-hold scheme from a config");
  sim->add_option("config", config, "config JSON")->required()->check(CLI::ExistingFile);
  sim->add_option("-o,--out", out_dir, "output directory")->capture_default_str();

  std::vector<std::string> suites;
  std::uint64_t seed = lab::default_seed();
  std::string json_out;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suites, "metric, examples, flows, scheme, prokhorov, metrization or all")
      ->required();
  verify->add_option("--seed", seed, "random seed (default from GWASS_SEED)");
  verify->add_option("--json", json_out, "write the JSON report here (- for stdout)");
  verify->add_flag("--timing", timing, "include wall time in the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*dist) return run_dist(pair);
    if (*wass) return run_wasserstein(pair, tol);
    if (*oracle) return run_oracle(pair, grid);
    if (*prok) return run_prokhorov(lp);
    if (*sim) return run_simulate(config, out_dir);
    if (*verify) return run_verify(suites, seed, json_out, timing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
