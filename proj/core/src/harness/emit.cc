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


#include "causalbid/harness/emit.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace causalbid {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << text;
  out.close();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

double ParseNumber(const std::string& field) {
  double v = 0.0;
  const char* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("CSV: bad number '" + field + "'");
  }
  return v;
}

Branch ParseBranch(const std::string& s) {
  for (Branch b : {Branch::kNone, Branch::kInit, Branch::kExplore,
                   Branch::kAssign, Branch::kExploit}) {
    if (BranchName(b) == s) return b;
  }
  throw std::invalid_argument("CSV: unknown branch '" + s + "'");
}

// "Nice" tick step covering `span` with about `count` ticks.
double TickStep(double span, int count) {
  const double raw = span / count;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10.0 * mag;
}

std::string EscapeXml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Fixed(double v, int digits = 2) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

}  // namespace

std::string FormatDouble(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("FormatDouble failed");
  return std::string(buf, ptr);
}

std::string RunCsv(const RunResult& run) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const RoundRecord& r : run.rounds) {
    out += std::to_string(r.t);
    out += ',';
    out += FormatDouble(r.bid);
    out += r.won ? ",1," : ",0,";
    if (r.payment) out += FormatDouble(*r.payment);
    out += ',';
    out += FormatDouble(r.outcome);
    out += ',';
    out += BranchName(r.branch);
    out += ',';
    out += FormatDouble(r.inst_regret);
    out += ',';
    out += FormatDouble(r.cum_regret);
    out += '\n';
  }
  return out;
}

std::vector<RoundRecord> ParseRunCsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("CSV: missing or wrong header");
  }
  std::vector<RoundRecord> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      f.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (f.size() != 8) throw std::invalid_argument("CSV: expected 8 fields");
    RoundRecord r;
    r.t = static_cast<std::int64_t>(ParseNumber(f[0]));
    r.bid = ParseNumber(f[1]);
    if (f[2] != "0" && f[2] != "1") throw std::invalid_argument("CSV: bad won");
    r.won = f[2] == "1";
    if (r.won != !f[3].empty()) {
      throw std::invalid_argument("CSV: payment must be present iff won");
    }
    if (r.won) r.payment = ParseNumber(f[3]);
    r.outcome = ParseNumber(f[4]);
    r.branch = ParseBranch(f[5]);
    r.inst_regret = ParseNumber(f[6]);
    r.cum_regret = ParseNumber(f[7]);
    rows.push_back(r);
  }
  return rows;
}

std::vector<std::int64_t> PlotRounds(std::int64_t horizon, int max_points) {
  std::vector<std::int64_t> rounds;
  const std::int64_t n = std::min<std::int64_t>(horizon, max_points);
  for (std::int64_t i = 1; i <= n; ++i) {
    rounds.push_back(std::max<std::int64_t>(1, (horizon * i) / n));
  }
  rounds.erase(std::unique(rounds.begin(), rounds.end()), rounds.end());
  return rounds;
}

std::string RegretSvg(const std::vector<PlotSeries>& series,
                      const std::string& title) {
  constexpr double kWidth = 800, kHeight = 500;
  constexpr double kLeft = 90, kRight = 170, kTop = 50, kBottom = 70;
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;

  double x_max = 1.0, y_max = 0.0;
  for (const PlotSeries& s : series) {
    for (const Checkpoint& c : s.points) {
      x_max = std::max(x_max, static_cast<double>(c.t));
      y_max = std::max(y_max, c.mean + c.std);
    }
  }
  if (y_max <= 0.0) y_max = 1.0;
  const double y_step = TickStep(y_max, 5);
  y_max = std::ceil(y_max / y_step) * y_step;
  const double x_step = TickStep(x_max, 5);

  auto px = [&](double t) { return kLeft + pw * t / x_max; };
  auto py = [&](double v) {
    return kTop + ph * (1.0 - std::clamp(v, 0.0, y_max) / y_max);
  };

  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << kWidth << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth
     << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << kLeft + pw / 2 << "\" y=\"28\" text-anchor=\"middle\" "
     << "font-size=\"16\">" << EscapeXml(title) << "</text>\n";

  // Grid and ticks.
  for (double y = 0.0; y <= y_max + 1e-12; y += y_step) {
    os << "<line x1=\"" << kLeft << "\" y1=\"" << Fixed(py(y)) << "\" x2=\""
       << kLeft + pw << "\" y2=\"" << Fixed(py(y))
       << "\" stroke=\"#dddddd\"/>\n"
       << "<text x=\"" << kLeft - 8 << "\" y=\"" << Fixed(py(y) + 4)
       << "\" text-anchor=\"end\">" << FormatDouble(y) << "</text>\n";
  }
  for (double x = 0.0; x <= x_max + 1e-9; x += x_step) {
    os << "<line x1=\"" << Fixed(px(x)) << "\" y1=\"" << kTop + ph
       << "\" x2=\"" << Fixed(px(x)) << "\" y2=\"" << kTop + ph + 5
       << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << Fixed(px(x)) << "\" y=\"" << kTop + ph + 20
       << "\" text-anchor=\"middle\">" << FormatDouble(x) << "</text>\n";
  }
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
     << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n"
     << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 20
     << "\" text-anchor=\"middle\">round t</text>\n"
     << "<text transform=\"translate(24," << kTop + ph / 2
     << ") rotate(-90)\" text-anchor=\"middle\">cumulative expected regret"
     << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const PlotSeries& s = series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    if (s.points.empty()) continue;
    os << "<polygon fill=\"" << color << "\" fill-opacity=\"0.2\" "
       << "stroke=\"none\" points=\"";
    for (const Checkpoint& c : s.points) {
      os << Fixed(px(c.t)) << ',' << Fixed(py(c.mean + c.std)) << ' ';
    }
    for (auto it = s.points.rbegin(); it != s.points.rend(); ++it) {
      os << Fixed(px(it->t)) << ',' << Fixed(py(it->mean - it->std)) << ' ';
    }
    os << "\"/>\n<polyline fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"2\" points=\"";
    for (const Checkpoint& c : s.points) {
      os << Fixed(px(c.t)) << ',' << Fixed(py(c.mean)) << ' ';
    }
    os << "\"/>\n";
    const double ly = kTop + 20 + 22 * static_cast<double>(k);
    os << "<line x1=\"" << kLeft + pw + 15 << "\" y1=\"" << ly << "\" x2=\""
       << kLeft + pw + 40 << "\" y2=\"" << ly << "\" stroke=\"" << color
       << "\" stroke-width=\"2\"/>\n"
       << "<text x=\"" << kLeft + pw + 46 << "\" y=\"" << ly + 4 << "\">"
       << EscapeXml(s.name) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string SummaryJson(const ExperimentOutput& output,
                        const std::string& timestamp) {
  Json j;
  j["metadata"] = {{"generator", "causalbid"}, {"generated_at", timestamp}};
  j["config"] = Json::parse(ConfigToJson(output.config));
  j["checkpoints"] = CheckpointRounds(output.config.horizon);
  Json policies = Json::array();
  for (const PolicySummary& s : output.summaries) {
    Json p;
    p["policy"] = s.policy;
    p["runs"] = s.runs;
    Json means = Json::array(), stds = Json::array();
    for (const Checkpoint& c : s.checkpoints) {
      means.push_back(c.mean);
      stds.push_back(c.std);
    }
    p["mean_cum_regret"] = means;
    p["std_cum_regret"] = stds;
    p["final_regret"] = {{"mean", s.final_regret.mean},
                         {"std", s.final_regret.std}};
    p["explore_rounds"] = {{"mean", s.explore_rounds.mean},
                           {"std", s.explore_rounds.std}};
    const double rounds = std::max<double>(1.0, static_cast<double>(s.clip_rounds));
    p["diagnostics"] = {
        {"rounds", s.clip_rounds},
        {"mean_clip_rate", static_cast<double>(s.mean_clipped) / rounds},
        {"v1_clip_rate", static_cast<double>(s.v1_clipped) / rounds}};
    policies.push_back(p);
  }
  j["policies"] = policies;
  return j.dump(2) + "\n";
}

void EmitExperiment(const ExperimentOutput& output) {
  if (output.results.empty()) throw std::invalid_argument("emit: no runs");
  const std::filesystem::path dir(output.config.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory: " + dir.string());

  if (output.config.write_csv) {
    for (const std::vector<RunResult>& runs : output.results) {
      for (const RunResult& r : runs) {
        WriteFile(dir / (r.policy + "_run" + std::to_string(r.run) + ".csv"),
                  RunCsv(r));
      }
    }
  }

  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  WriteFile(dir / "summary.json", SummaryJson(output, stamp));

  if (output.config.plot) {
    std::vector<PlotSeries> series;
    const std::vector<std::int64_t> rounds = PlotRounds(output.config.horizon);
    for (const std::vector<RunResult>& runs : output.results) {
      if (runs.empty()) continue;
      series.push_back({runs.front().policy, CumulativeRegretAt(runs, rounds)});
    }
    WriteFile(dir / "regret.svg",
              RegretSvg(series, "Mean cumulative expected regret (" +
                                    std::to_string(output.config.runs) +
                                    " runs)"));
  }
}

}  // namespace causalbid
