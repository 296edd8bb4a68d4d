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


#include "causalbid/harness/runner.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "causalbid/master_policy.h"
#include "causalbid/practical_policy.h"
#include "causalbid/rewards.h"

namespace causalbid {

namespace {

Baseline ParseBaseline(const std::string& s) {
  if (s == "periodic") return Baseline::kPeriodic;
  if (s == "two_level") return Baseline::kTwoLevel;
  if (s == "constant") return Baseline::kConstant;
  if (s == "zero") return Baseline::kZero;
  throw std::invalid_argument("unknown baseline: " + s);
}

std::int64_t ExploreCount(const Policy& policy) {
  if (const auto* m = dynamic_cast<const MasterPolicy*>(&policy)) {
    return static_cast<std::int64_t>(m->explore_log().size());
  }
  if (const auto* p = dynamic_cast<const TesPolicy*>(&policy)) {
    return p->explore_rounds();
  }
  return 0;
}

}  // namespace

BidChoice OraclePolicy::Choose(std::int64_t /*t*/, const Context& x,
                               Rng& /*rng*/) {
  return {TruthfulOracle(env_.hob(), env_.MarginalValue(x)).bid, Branch::kNone,
          0};
}

std::unique_ptr<Environment> MakeEnvironment(const EnvironmentConfig& config,
                                             std::int64_t horizon, Rng& rng) {
  if (config.kind == "lower_bound") {
    return std::make_unique<LowerBoundEnvironment>(config.dim, horizon, rng);
  }
  SyntheticSpec spec;
  spec.dim = config.dim;
  spec.hob = config.hob;
  spec.frequency = config.frequency;
  spec.clip_v1 = config.clip_v1;
  spec.baseline_low = config.baseline_low;
  spec.baseline_high = config.baseline_high;
  if (config.kind == "custom") {
    spec.baseline = ParseBaseline(config.baseline);
    spec.contexts = config.contexts == "positive" ? ContextLaw::kPositive
                                                  : ContextLaw::kGaussian;
  } else if (config.kind != "periodic") {
    throw std::invalid_argument("unknown environment: " + config.kind);
  }
  return std::make_unique<SyntheticEnvironment>(spec, rng);
}

std::unique_ptr<Policy> MakePolicy(const PolicyConfig& config,
                                   const Environment& env,
                                   std::int64_t horizon) {
  const ConfidenceOptions confidence{config.confidence_scale,
                                     config.explore_threshold};
  const HobParams params = env.hob().local_params();
  if (config.name == "master") {
    return std::make_unique<MasterPolicy>(horizon, env.dim(), params, confidence);
  }
  if (config.name == "linucb_tes") {
    return std::make_unique<TesPolicy>(horizon, env.dim(), params,
                                       TesOptions{config.eta, confidence});
  }
  if (config.name == "linucb") {
    return std::make_unique<LinUcbPolicy>(env.dim(), config.alpha);
  }
  if (config.name == "oracle") return std::make_unique<OraclePolicy>(env);
  throw std::invalid_argument("unknown policy: " + config.name);
}

RunResult RunOnce(const ExperimentConfig& config, const PolicyConfig& policy,
                  int run) {
  RunResult result;
  result.policy = policy.name;
  result.run = run;
  result.seed = config.seed + static_cast<std::uint64_t>(run);
  Rng build_rng(result.seed, 0);
  Rng env_rng(result.seed, 1);
  Rng policy_rng(result.seed, 2);
  std::unique_ptr<Environment> env =
      MakeEnvironment(config.environment, config.horizon, build_rng);
  std::unique_ptr<Policy> bidder = MakePolicy(policy, *env, config.horizon);

  result.rounds.reserve(static_cast<std::size_t>(config.horizon));
  double cum = 0.0;
  for (std::int64_t t = 1; t <= config.horizon; ++t) {
    const Draw d = env->Step(t, env_rng);
    const BidChoice choice = bidder->Choose(t, d.x, policy_rng);
    const AuctionFeedback fb = RunAuction(d.hob, d.v1, d.v0, choice.bid);
    bidder->Update(t, d.x, choice.bid, fb);

    const double v = env->MarginalValue(d.x);
    const double inst = TruthfulOracle(env->hob(), v).reward -
                        ExpectedReward(env->hob(), v, choice.bid);
    cum += inst;
    RoundRecord r;
    r.t = t;
    r.bid = choice.bid;
    r.won = fb.won();
    r.payment = fb.payment();
    r.outcome = fb.observed_outcome();
    r.branch = choice.branch;
    r.inst_regret = inst;
    r.cum_regret = cum;
    r.payoff = RealizedPayoff(fb);
    result.rounds.push_back(r);
  }
  result.clip = env->clip_stats();
  result.explore_rounds = ExploreCount(*bidder);
  return result;
}

std::vector<RunResult> RunExperiment(const ExperimentConfig& config,
                                     const PolicyConfig& policy) {
  config.Validate();
  std::vector<RunResult> results(static_cast<std::size_t>(config.runs));
  unsigned workers = config.threads > 0
                         ? static_cast<unsigned>(config.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(config.runs));

  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (int r = next++; r < config.runs; r = next++) {
        results[r] = RunOnce(config, policy, r);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& th : pool) th.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace causalbid
