// Copyright 2026 The TripletForge Authors.
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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json_util.hpp"
#include "tforge/error.hpp"
#include "tforge/mspt.hpp"

namespace tforge::mspt {
namespace {

std::vector<double> f1_column(const metrics::EvalReport& r) {
  std::vector<double> out;
  out.reserve(r.rows.size());
  for (const auto& row : r.rows) out.push_back(row.bertscore.f1);
  return out;
}

// JSON has no infinities; a degenerate t is written as a signed string.
jsonl::json number_or_string(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

double read_number(const jsonl::json& j) {
  if (j.is_string()) return j.get<std::string>() == "-inf" ? -INFINITY : INFINITY;
  return j.get<double>();
}

}  // namespace

MsptResult run_mspt(std::span<const dataset::Triple> predictions,
                    std::span<const dataset::Triple> gold, std::uint64_t seed,
                    metrics::EmbeddingProvider& embedder, const MsptOptions& opts,
                    std::span<const dataset::Triple> pool) {
  if (gold.size() < 2) throw Error(ErrorCode::kTooFewRecords, "MSPT needs at least 2 rows");
  const auto randomized = pool.empty() ? dataset::randomize_gold(gold, seed)
                                       : dataset::randomize_gold_from_pool(gold, pool, seed);
  metrics::CachingEmbedder cached(embedder);
  const auto actual = metrics::evaluate(predictions, gold, cached, opts.workers);
  const auto random = metrics::evaluate_objects(predictions, randomized.records, cached, opts.workers);

  MsptResult result;
  result.actual = f1_column(actual);
  result.random = f1_column(random);
  auto& rep = result.report;
  rep.n = gold.size();
  rep.seed = seed;
  rep.embedder = embedder.identity();
  rep.fixed_points = pool.empty() ? randomized.fixed_points : randomized.unchanged_objects;
  rep.mean_actual = mean(result.actual);
  rep.mean_random = mean(result.random);
  rep.gap_pct = (rep.mean_actual - rep.mean_random) * 100.0;
  const auto welch = welch_t_test(result.actual, result.random);
  rep.t_stat = welch.t_stat;
  rep.dof = welch.dof;
  rep.degenerate = welch.degenerate;
  rep.p_value = welch.p_value;
  if (opts.test == Test::kMannWhitney) {
    rep.test = "mann-whitney";
    rep.mann_whitney = mann_whitney_u(result.actual, result.random);
    rep.p_value = rep.mann_whitney->p_value;
  }
  return result;
}

BaselineComparison compare_to_baseline(const MsptReport& report,
                                       const std::filesystem::path& baseline_report) {
  const auto base = read_mspt_report(baseline_report);
  BaselineComparison c;
  c.baseline_p_value = base.p_value;
  c.baseline_gap_pct = base.gap_pct;
  c.p_value_difference = base.p_value - report.p_value;
  c.gap_increase = report.gap_pct - base.gap_pct;
  return c;
}

void write_mspt_report(const MsptResult& result, const std::filesystem::path& json_path,
                       const std::filesystem::path& arrays_csv,
                       const std::optional<BaselineComparison>& baseline) {
  const auto& r = result.report;
  jsonl::json j = {{"n", r.n},
                   {"mean_actual", r.mean_actual},
                   {"mean_random", r.mean_random},
                   {"gap_pct", r.gap_pct},
                   {"t_stat", number_or_string(r.t_stat)},
                   {"dof", r.dof},
                   {"p_value", r.p_value},
                   {"seed", r.seed},
                   {"test", r.test},
                   {"degenerate", r.degenerate},
                   {"fixed_points", r.fixed_points},
                   {"embedder", r.embedder},
                   {"arrays", arrays_csv.filename().string()}};
  if (r.mann_whitney) {
    j["mann_whitney"] = {{"u", r.mann_whitney->u},
                         {"z", r.mann_whitney->z},
                         {"p_value", r.mann_whitney->p_value}};
  }
  if (baseline) {
    j["baseline"] = {{"p_value", baseline->baseline_p_value},
                     {"gap_pct", baseline->baseline_gap_pct},
                     {"p_value_difference", baseline->p_value_difference},
                     {"gap_increase", baseline->gap_increase},
                     {"note", "descriptive difference of two p-values; not a test"}};
  }
  {
    std::ofstream out(json_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + json_path.string());
    out << j.dump(1) << '\n';
  }
  std::ofstream out(arrays_csv, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + arrays_csv.string());
  out << "row,actual,random\n";
  char buf[96];
  for (std::size_t i = 0; i < result.actual.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i, result.actual[i], result.random[i]);
    out << buf;
  }
}

MsptReport read_mspt_report(const std::filesystem::path& json_path) {
  std::ifstream in(json_path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + json_path.string());
  MsptReport r;
  try {
    const auto j = jsonl::json::parse(in);
    r.n = j.at("n").get<std::size_t>();
    r.mean_actual = j.at("mean_actual").get<double>();
    r.mean_random = j.at("mean_random").get<double>();
    r.gap_pct = j.at("gap_pct").get<double>();
    r.t_stat = read_number(j.at("t_stat"));
    r.dof = j.at("dof").get<double>();
    r.p_value = j.at("p_value").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.test = j.value("test", "welch");
    r.degenerate = j.value("degenerate", false);
    r.fixed_points = j.value("fixed_points", std::size_t{0});
    r.embedder = j.value("embedder", "");
  } catch (const jsonl::json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, json_path.string() + ": " + e.what());
  }
  return r;
}

void read_mspt_arrays(const std::filesystem::path& arrays_csv, std::vector<double>& actual,
                      std::vector<double>& random) {
  std::ifstream in(arrays_csv, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + arrays_csv.string());
  std::string line;
  if (!std::getline(in, line) || line != "row,actual,random") {
    throw Error(ErrorCode::kMalformedInput, arrays_csv.string() + ": bad header");
  }
  actual.clear();
  random.clear();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t row = 0;
    double a = 0, b = 0;
    if (std::sscanf(line.c_str(), "%zu,%lf,%lf", &row, &a, &b) != 3) {
      throw Error(ErrorCode::kMalformedInput, arrays_csv.string() + ": bad row '" + line + "'");
    }
    actual.push_back(a);
    random.push_back(b);
  }
}

}  // namespace tforge::mspt
