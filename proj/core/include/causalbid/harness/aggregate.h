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


#ifndef CAUSALBID_HARNESS_AGGREGATE_H_
#define CAUSALBID_HARNESS_AGGREGATE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "causalbid/harness/runner.h"

namespace causalbid {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation; 0 for a single value
};
MeanStd Summarize(std::span<const double> values);

struct Checkpoint {
  std::int64_t t = 0;
  double mean = 0.0;
  double std = 0.0;
};

struct PolicySummary {
  std::string policy;
  int runs = 0;
  std::vector<Checkpoint> checkpoints;
  MeanStd final_regret;
  MeanStd explore_rounds;
  std::int64_t clip_rounds = 0;
  std::int64_t mean_clipped = 0;
  std::int64_t v1_clipped = 0;
};

// Rounds at 1, 2, 5, 10, 20, ..., 100 percent of the horizon (at least 1,
// deduplicated, ascending).
std::vector<std::int64_t> CheckpointRounds(std::int64_t horizon);

// Mean and std of cumulative regret at the given rounds across runs.
// Throws std::invalid_argument on an empty list or unequal lengths.
std::vector<Checkpoint> CumulativeRegretAt(const std::vector<RunResult>& runs,
                                           std::span<const std::int64_t> rounds);

PolicySummary Aggregate(const std::vector<RunResult>& runs);

}  // namespace causalbid

#endif  // CAUSALBID_HARNESS_AGGREGATE_H_
