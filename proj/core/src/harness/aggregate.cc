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


#include "causalbid/harness/aggregate.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace causalbid {

MeanStd Summarize(std::span<const double> values) {
  MeanStd s;
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

std::vector<std::int64_t> CheckpointRounds(std::int64_t horizon) {
  std::vector<int> percents = {1, 2, 5};
  for (int p = 10; p <= 100; p += 10) percents.push_back(p);
  std::vector<std::int64_t> rounds;
  for (int p : percents) {
    const auto t = static_cast<std::int64_t>(
        std::llround(static_cast<double>(horizon) * p / 100.0));
    rounds.push_back(std::clamp<std::int64_t>(t, 1, horizon));
  }
  rounds.erase(std::unique(rounds.begin(), rounds.end()), rounds.end());
  return rounds;
}

std::vector<Checkpoint> CumulativeRegretAt(
    const std::vector<RunResult>& runs, std::span<const std::int64_t> rounds) {
  if (runs.empty()) throw std::invalid_argument("aggregate: no runs");
  const std::size_t length = runs.front().rounds.size();
  for (const RunResult& r : runs) {
    if (r.rounds.size() != length) {
      throw std::invalid_argument("aggregate: runs differ in length");
    }
  }
  std::vector<Checkpoint> out;
  std::vector<double> values(runs.size());
  for (std::int64_t t : rounds) {
    if (t < 1 || static_cast<std::size_t>(t) > length) {
      throw std::out_of_range("aggregate: checkpoint outside the horizon");
    }
    for (std::size_t i = 0; i < runs.size(); ++i) {
      values[i] = runs[i].rounds[t - 1].cum_regret;
    }
    const MeanStd s = Summarize(values);
    out.push_back({t, s.mean, s.std});
  }
  return out;
}

PolicySummary Aggregate(const std::vector<RunResult>& runs) {
  if (runs.empty()) throw std::invalid_argument("aggregate: no runs");
  PolicySummary s;
  s.policy = runs.front().policy;
  s.runs = static_cast<int>(runs.size());
  const auto horizon = static_cast<std::int64_t>(runs.front().rounds.size());
  s.checkpoints = CumulativeRegretAt(runs, CheckpointRounds(horizon));
  std::vector<double> finals;
  std::vector<double> explores;
  for (const RunResult& r : runs) {
    finals.push_back(r.final_regret());
    explores.push_back(static_cast<double>(r.explore_rounds));
    s.clip_rounds += r.clip.rounds;
    s.mean_clipped += r.clip.mean_clipped;
    s.v1_clipped += r.clip.v1_clipped;
  }
  s.final_regret = Summarize(finals);
  s.explore_rounds = Summarize(explores);
  return s;
}

}  // namespace causalbid
