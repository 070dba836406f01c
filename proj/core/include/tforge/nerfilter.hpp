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
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tforge/extraction.hpp"

namespace tforge::ner {

using extraction::Triplet;

struct ScoredTriplet {
  Triplet triplet;
  double subject_prob = 0.0;
  double object_prob = 0.0;

  bool operator==(const ScoredTriplet&) const = default;
};

class EntityScorer {
 public:
  virtual ~EntityScorer() = default;
  // One probability per phrase, same order. Throws Error(kScorerUnavailable)
  // or Error(kProtocol); never returns fabricated scores.
  virtual std::vector<double> score(std::span<const std::string> phrases) = 0;
  virtual std::string name() const = 0;
};

struct HttpScorerConfig {
  std::string url;  // service root; requests go to <url>/ner_score
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{1000};
  std::chrono::milliseconds timeout{60000};
};

class HttpEntityScorer final : public EntityScorer {
 public:
  explicit HttpEntityScorer(HttpScorerConfig config);
  std::vector<double> score(std::span<const std::string> phrases) override;
  std::string name() const override { return "http"; }

 private:
  HttpScorerConfig config_;
};

// prob = (fnv1a64(phrase) >> 11) * 2^-53
double stub_probability(std::string_view phrase);

class HashStubScorer final : public EntityScorer {
 public:
  std::vector<double> score(std::span<const std::string> phrases) override;
  std::string name() const override { return "stub"; }
};

// Lexicon lookup from JSON lines {"phrase","prob"}; phrases not in the
// table get default_prob.
class TableScorer final : public EntityScorer {
 public:
  explicit TableScorer(const std::filesystem::path& lexicon, double default_prob = 0.0);
  std::vector<double> score(std::span<const std::string> phrases) override;
  std::string name() const override { return "table"; }

 private:
  std::map<std::string, double, std::less<>> table_;
  double default_prob_;
};

// Phrase -> probability cache persisted as JSON lines {"phrase","prob"}.
// An empty path keeps it in memory only.
class PhraseCache {
 public:
  PhraseCache() = default;
  explicit PhraseCache(std::filesystem::path path);

  std::optional<double> get(std::string_view phrase) const;
  void put_many(std::span<const std::string> phrases, std::span<const double> probs);
  std::size_t size() const;

 private:
  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::map<std::string, double, std::less<>> entries_;
};

struct ScoreOptions {
  std::size_t batch_size = 32;
  std::size_t max_in_flight = 2;
};

struct ScoreStats {
  std::size_t unique_phrases = 0;
  std::size_t cache_hits = 0;
  std::size_t batches = 0;
};

// Subjects and objects are scored; relations are not. Each distinct phrase
// is sent to the scorer at most once per call, and never if cached.
// Output order follows input order.
std::vector<ScoredTriplet> score_triplets(std::span<const Triplet> triplets, EntityScorer& scorer,
                                          const ScoreOptions& opts, PhraseCache* cache = nullptr,
                                          ScoreStats* stats = nullptr);

struct FilterFunnel {
  std::size_t input = 0;
  std::size_t kept = 0;
  std::size_t rejected = 0;
};

// Keeps records with subject_prob > threshold and object_prob > threshold.
// Throws Error(kInvalidArgument) when threshold is outside [0,1].
std::vector<Triplet> filter_scored(std::span<const ScoredTriplet> scored, double threshold,
                                   FilterFunnel* funnel = nullptr);

// Drops exact (subject, relation, object) repeats, keeping the first.
std::vector<Triplet> dedup_triplets(std::span<const Triplet> triplets);

void write_scored(const std::filesystem::path& path, std::span<const ScoredTriplet> scored);
std::vector<ScoredTriplet> read_scored(const std::filesystem::path& path);

}  // namespace tforge::ner
