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

#include <cstdio>
#include <fstream>
#include <set>

#include "json_util.hpp"
#include "tforge/error.hpp"
#include "tforge/metrics.hpp"
#include "tforge/parallel.hpp"

namespace tforge::metrics {
namespace {

jsonl::json pair_json(const ScorePair& s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

jsonl::json row_json(const RowScores& r) {
  return {{"rouge1", pair_json(r.rouge1)},
          {"rouge2", pair_json(r.rouge2)},
          {"rougeL", pair_json(r.rougeL)},
          {"bertscore", pair_json(r.bertscore)}};
}

void add(ScorePair& acc, const ScorePair& x) {
  acc.precision += x.precision;
  acc.recall += x.recall;
  acc.f1 += x.f1;
}

void divide(ScorePair& acc, double n) {
  acc.precision /= n;
  acc.recall /= n;
  acc.f1 /= n;
}

EvalReport score_rows(std::span<const dataset::Triple> predictions,
                      std::span<const dataset::Triple> gold, EmbeddingProvider& embedder,
                      std::size_t workers) {
  if (predictions.size() != gold.size()) {
    throw Error(ErrorCode::kRowMisalignment,
                std::to_string(predictions.size()) + " prediction rows vs " +
                    std::to_string(gold.size()) + " gold rows");
  }
  EvalReport report;
  report.embedder = embedder.identity();
  report.predictions.assign(predictions.begin(), predictions.end());
  report.gold.assign(gold.begin(), gold.end());
  const std::size_t n = predictions.size();

  std::vector<std::string> texts;
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto* t : {&predictions[i].object, &gold[i].object}) {
      if (seen.insert(*t).second) texts.push_back(*t);
    }
  }
  const auto embedded = embedder.embed(texts);
  if (embedded.size() != texts.size()) {
    throw Error(ErrorCode::kProtocol, "embedder returned a misaligned batch");
  }
  std::map<std::string_view, const TokenEmbeddings*> by_text;
  for (std::size_t k = 0; k < texts.size(); ++k) by_text[texts[k]] = &embedded[k];

  report.rows.resize(n);
  parallel_for(n, workers, [&](std::size_t i) {
    const auto cand = tokenize_for_rouge(predictions[i].object);
    const auto ref = tokenize_for_rouge(gold[i].object);
    auto& row = report.rows[i];
    row.rouge1 = rouge_n(cand, ref, 1);
    row.rouge2 = rouge_n(cand, ref, 2);
    row.rougeL = rouge_l(cand, ref);
    const auto& ce = *by_text.at(predictions[i].object);
    const auto& re = *by_text.at(gold[i].object);
    if (!ce.vectors.empty() && !re.vectors.empty()) row.bertscore = bertscore(ce, re);
  });

  for (const auto& r : report.rows) {
    add(report.aggregate.rouge1, r.rouge1);
    add(report.aggregate.rouge2, r.rouge2);
    add(report.aggregate.rougeL, r.rougeL);
    add(report.aggregate.bertscore, r.bertscore);
  }
  if (n > 0) {
    const double dn = static_cast<double>(n);
    divide(report.aggregate.rouge1, dn);
    divide(report.aggregate.rouge2, dn);
    divide(report.aggregate.rougeL, dn);
    divide(report.aggregate.bertscore, dn);
  }
  return report;
}

}  // namespace

EvalReport evaluate(std::span<const dataset::Triple> predictions,
                    std::span<const dataset::Triple> gold, EmbeddingProvider& embedder,
                    std::size_t workers) {
  const std::size_t n = std::min(predictions.size(), gold.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (predictions[i].subject != gold[i].subject || predictions[i].relation != gold[i].relation) {
      throw Error(ErrorCode::kRowMisalignment,
                  "row " + std::to_string(i + 1) + ": subject/relation differ from gold");
    }
  }
  return score_rows(predictions, gold, embedder, workers);
}

EvalReport evaluate_objects(std::span<const dataset::Triple> predictions,
                            std::span<const dataset::Triple> gold, EmbeddingProvider& embedder,
                            std::size_t workers) {
  return score_rows(predictions, gold, embedder, workers);
}

EvalReport evaluate_file(const std::filesystem::path& predictions,
                         const std::filesystem::path& gold, EmbeddingProvider& embedder,
                         std::size_t workers) {
  const auto pred = dataset::read_split_csv(predictions);
  const auto ref = dataset::read_split_csv(gold);
  return evaluate(pred, ref, embedder, workers);
}

void write_eval_report(const EvalReport& report, const std::filesystem::path& json_path,
                       const std::filesystem::path& csv_path) {
  jsonl::json rows = jsonl::json::array();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    auto r = row_json(report.rows[i]);
    r["row"] = i;
    r["prediction"] = report.predictions[i].object;
    r["gold"] = report.gold[i].object;
    rows.push_back(std::move(r));
  }
  const jsonl::json doc = {{"n", report.rows.size()},
                           {"embedder", report.embedder},
                           {"aggregate", row_json(report.aggregate)},
                           {"rows", std::move(rows)}};
  {
    std::ofstream out(json_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + json_path.string());
    out << doc.dump(1) << '\n';
  }
  if (csv_path.empty()) return;
  std::ofstream out(csv_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + csv_path.string());
  out << "row,rouge1_p,rouge1_r,rouge1_f1,rouge2_p,rouge2_r,rouge2_f1,rougeL_p,rougeL_r,"
         "rougeL_f1,bertscore_p,bertscore_r,bertscore_f1\n";
  char buf[64];
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    out << i;
    const auto& r = report.rows[i];
    for (const auto* s : {&r.rouge1, &r.rouge2, &r.rougeL, &r.bertscore}) {
      for (double v : {s->precision, s->recall, s->f1}) {
        std::snprintf(buf, sizeof buf, ",%.17g", v);
        out << buf;
      }
    }
    out << '\n';
  }
}

}  // namespace tforge::metrics
