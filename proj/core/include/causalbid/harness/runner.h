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


#ifndef CAUSALBID_HARNESS_RUNNER_H_
#define CAUSALBID_HARNESS_RUNNER_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "causalbid/environments.h"
#include "causalbid/harness/config.h"
#include "causalbid/policy.h"
#include "causalbid/rng.h"

namespace causalbid {

struct RoundRecord {
  std::int64_t t = 0;
  double bid = 0.0;
  bool won = false;
  std::optional<double> payment;
  double outcome = 0.0;
  Branch branch = Branch::kNone;
  double inst_regret = 0.0;
  double cum_regret = 0.0;
  double payoff = 0.0;  // realized, diagnostics only
};

struct RunResult {
  std::string policy;
  int run = 0;
  std::uint64_t seed = 0;
  std::vector<RoundRecord> rounds;
  ClipStats clip;
  std::int64_t explore_rounds = 0;
  double final_regret() const {
    return rounds.empty() ? 0.0 : rounds.back().cum_regret;
  }
};

// Bids the best response to the true marginal value and HOB distribution.
class OraclePolicy final : public Policy {
 public:
  explicit OraclePolicy(const Environment& env) : env_(env) {}
  std::string_view name() const override { return "oracle"; }
  BidChoice Choose(std::int64_t t, const Context& x, Rng& rng) override;
  void Update(std::int64_t, const Context&, double,
              const AuctionFeedback&) override {}

 private:
  const Environment& env_;
};

// Random streams of one run with seed s: environment construction uses
// Rng(s, 0), environment draws Rng(s, 1) and the policy Rng(s, 2). Every
// policy therefore faces the same market realization for a given seed.
std::unique_ptr<Environment> MakeEnvironment(const EnvironmentConfig& config,
                                             std::int64_t horizon, Rng& rng);
std::unique_ptr<Policy> MakePolicy(const PolicyConfig& config,
                                   const Environment& env,
                                   std::int64_t horizon);

// One run with seed config.seed + run. Regret is expected regret: the best
// expected payoff at the true marginal value minus that of the placed bid.
RunResult RunOnce(const ExperimentConfig& config, const PolicyConfig& policy,
                  int run);

// All runs of one policy, spread over worker threads; results are ordered
// by run index regardless of completion order.
std::vector<RunResult> RunExperiment(const ExperimentConfig& config,
                                     const PolicyConfig& policy);

}  // namespace causalbid

#endif  // CAUSALBID_HARNESS_RUNNER_H_
