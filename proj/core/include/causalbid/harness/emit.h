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


#ifndef CAUSALBID_HARNESS_EMIT_H_
#define CAUSALBID_HARNESS_EMIT_H_

#include <string>
#include <vector>

#include "causalbid/harness/aggregate.h"
#include "causalbid/harness/config.h"
#include "causalbid/harness/runner.h"

namespace causalbid {

inline constexpr char kCsvHeader[] =
    "t,bid,won,payment,outcome,branch,inst_regret,cum_regret";

// Shortest round-trip decimal form, locale independent.
std::string FormatDouble(double v);

// Per-run trajectory as CSV text (header plus one LF-terminated row per
// round; payment is empty for lost rounds).
std::string RunCsv(const RunResult& run);
// Inverse of RunCsv for the logged columns. Throws std::invalid_argument on
// malformed input.
std::vector<RoundRecord> ParseRunCsv(const std::string& text);

struct PlotSeries {
  std::string name;
  std::vector<Checkpoint> points;  // mean and std of cumulative regret
};
// Standalone SVG 1.1 chart: one mean line per series with a +-1 std band.
std::string RegretSvg(const std::vector<PlotSeries>& series,
                      const std::string& title);
// Evenly spaced rounds for plotting (at most `max_points`, always including
// the last round).
std::vector<std::int64_t> PlotRounds(std::int64_t horizon, int max_points = 400);

struct ExperimentOutput {
  ExperimentConfig config;
  std::vector<std::vector<RunResult>> results;  // one entry per policy
  std::vector<PolicySummary> summaries;
};

std::string SummaryJson(const ExperimentOutput& output,
                        const std::string& timestamp);

// Writes <out>/<policy>_run<r>.csv (if enabled), <out>/summary.json and,
// with the plot flag, <out>/regret.svg. Throws std::runtime_error naming the
// failing path.
void EmitExperiment(const ExperimentOutput& output);

}  // namespace causalbid

#endif  // CAUSALBID_HARNESS_EMIT_H_
