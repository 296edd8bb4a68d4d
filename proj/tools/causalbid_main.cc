// Copyright 2026 The CausalBid Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end: `simulate` runs an experiment from a JSON config,
// `verify` runs one named property suite.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "causalbid/harness/aggregate.h"
#include "causalbid/harness/config.h"
#include "causalbid/harness/emit.h"
#include "causalbid/harness/runner.h"
#include "causalbid/harness/suites.h"

namespace {

int Simulate(const std::string& path, const CLI::Option* runs_opt, int runs,
             const CLI::Option* seed_opt, std::uint64_t seed,
             const CLI::Option* out_opt, const std::string& out, bool plot) {
  causalbid::ExperimentConfig config = causalbid::LoadConfig(path);
  if (*runs_opt) config.runs = runs;
  if (*seed_opt) config.seed = seed;
  if (*out_opt) config.out_dir = out;
  if (plot) config.plot = true;
  config.Validate();

  causalbid::ExperimentOutput output;
  output.config = config;
  for (const causalbid::PolicyConfig& policy : config.policies) {
    output.results.push_back(causalbid::RunExperiment(config, policy));
    output.summaries.push_back(causalbid::Aggregate(output.results.back()));
    const causalbid::PolicySummary& s = output.summaries.back();
    std::cout << "policy=" << s.policy << " runs=" << s.runs
              << " final_regret_mean=" << s.final_regret.mean
              << " final_regret_std=" << s.final_regret.std << '\n';
  }
  causalbid::EmitExperiment(output);
  std::cout << "wrote " << config.out_dir << '\n';
  return 0;
}

int Verify(const std::string& suite, std::uint64_t seed) {
  const causalbid::SuiteReport report = causalbid::RunSuite(suite, seed);
  std::cout << causalbid::FormatReport(report);
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online causal bidding simulator"};
  app.require_subcommand(1);

  CLI::App* simulate = app.add_subcommand("simulate", "Run an experiment");
  std::string config_path;
  int runs = 0;
  std::uint64_t sim_seed = 0;
  std::string out_dir;
  bool plot = false;
  simulate->add_option("--config", config_path, "JSON experiment config")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::Option* runs_opt =
      simulate->add_option("--runs", runs, "Number of seeded runs")
          ->check(CLI::PositiveNumber);
  CLI::Option* seed_opt = simulate->add_option("--seed", sim_seed, "Base seed");
  CLI::Option* out_opt = simulate->add_option("--out", out_dir, "Output directory");
  simulate->add_flag("--plot", plot, "Write regret.svg");

  CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
  std::string suite;
  std::uint64_t verify_seed = 1;
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(causalbid::SuiteNames()));
  verify->add_option("--seed", verify_seed, "Seed");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*simulate) {
      return Simulate(config_path, runs_opt, runs, seed_opt, sim_seed, out_opt,
                      out_dir, plot);
    }
    return Verify(suite, verify_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
