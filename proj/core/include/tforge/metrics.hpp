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

#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tforge/dataset.hpp"

namespace tforge::metrics {

struct ScorePair {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// f1 = 2pr/(p+r), or 0 when p+r <= 0.
ScorePair make_score(double precision, double recall);

// Lowercase, split on non-alphanumeric ASCII, drop empties. Bytes >= 0x80
// count as alphanumeric so UTF-8 text is never split mid-character.
std::vector<std::string> tokenize_for_rouge(std::string_view text);

// Clipped n-gram overlap; precision and recall divide by max(1, #n-grams).
// Throws Error(kInvalidArgument) for n == 0.
ScorePair rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference,
                  std::size_t n);

// Longest common subsequence by dynamic programming.
ScorePair rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference);

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

struct TokenEmbeddings {
  std::vector<std::string> tokens;
  std::vector<std::vector<double>> vectors;

  std::size_t dim() const { return vectors.empty() ? 0 : vectors.front().size(); }
  // Throws Error(kProtocol) when tokens and vectors disagree in length, a
  // vector has the wrong dimension, or a component is not finite.
  void validate() const;
};

// Greedy cosine matching without IDF weighting or baseline rescaling.
// Throws Error(kEmptySide) or Error(kDimensionMismatch).
ScorePair bertscore(const TokenEmbeddings& candidate, const TokenEmbeddings& reference);

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::vector<TokenEmbeddings> embed(std::span<const std::string> texts) = 0;
  // Recorded in reports.
  virtual std::string identity() const = 0;
};

struct HttpEmbedderConfig {
  std::string url;  // service root; requests go to <url>/embed
  std::size_t batch_size = 64;
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{1000};
  std::chrono::milliseconds timeout{120000};
};

class HttpEmbedder final : public EmbeddingProvider {
 public:
  explicit HttpEmbedder(HttpEmbedderConfig config);
  std::vector<TokenEmbeddings> embed(std::span<const std::string> texts) override;
  std::string identity() const override;

 private:
  HttpEmbedderConfig config_;
};

// Each distinct token maps to a fixed unit vector drawn from SplitMix64
// seeded with fnv1a64(token). Tokens come from tokenize_for_rouge.
class ToyEmbedder final : public EmbeddingProvider {
 public:
  explicit ToyEmbedder(std::size_t dim = 256) : dim_(dim) {}
  std::vector<TokenEmbeddings> embed(std::span<const std::string> texts) override;
  std::string identity() const override;

  std::vector<double> token_vector(std::string_view token) const;

 private:
  std::size_t dim_;
};

// Forwards only texts it has not seen; thread-safe.
class CachingEmbedder final : public EmbeddingProvider {
 public:
  explicit CachingEmbedder(EmbeddingProvider& inner) : inner_(inner) {}
  std::vector<TokenEmbeddings> embed(std::span<const std::string> texts) override;
  std::string identity() const override { return inner_.identity(); }
  std::size_t forwarded_texts() const { return forwarded_; }

 private:
  EmbeddingProvider& inner_;
  std::mutex mu_;
  std::map<std::string, TokenEmbeddings, std::less<>> cache_;
  std::size_t forwarded_ = 0;
};

struct RowScores {
  ScorePair rouge1;
  ScorePair rouge2;
  ScorePair rougeL;
  ScorePair bertscore;
};

struct EvalReport {
  std::string embedder;
  std::vector<dataset::Triple> predictions;
  std::vector<dataset::Triple> gold;
  std::vector<RowScores> rows;
  RowScores aggregate;  // arithmetic means, row order
};

// Rows must agree in count and in subject/relation, else
// Error(kRowMisalignment). Scores compare object columns. A row whose
// prediction or gold object has no tokens gets a zero BERTScore.
EvalReport evaluate(std::span<const dataset::Triple> predictions,
                    std::span<const dataset::Triple> gold, EmbeddingProvider& embedder,
                    std::size_t workers = 0);

// Same, but only the subject/relation alignment is skipped; used when gold
// objects were re-assigned (randomized gold).
EvalReport evaluate_objects(std::span<const dataset::Triple> predictions,
                            std::span<const dataset::Triple> gold, EmbeddingProvider& embedder,
                            std::size_t workers = 0);

EvalReport evaluate_file(const std::filesystem::path& predictions,
                         const std::filesystem::path& gold, EmbeddingProvider& embedder,
                         std::size_t workers = 0);

// eval_report.json plus a per-row CSV mirror.
void write_eval_report(const EvalReport& report, const std::filesystem::path& json_path,
                       const std::filesystem::path& csv_path);

}  // namespace tforge::metrics
