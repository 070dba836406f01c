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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tforge/corpus.hpp"

namespace tforge::relevance {

// Thesaurus terms the corpus is ranked against. Throws
// Error(kInvalidArgument) when empty or when a term has no indexable token.
class TermQuery {
 public:
  explicit TermQuery(std::vector<std::string> terms);

  const std::vector<std::string>& terms() const { return terms_; }
  // Tokenized terms with two or more tokens, matched as phrases.
  const std::vector<std::vector<std::string>>& phrases() const { return phrases_; }
  // All terms joined by a space: the text the query vector is built from.
  std::string text() const;

 private:
  std::vector<std::string> terms_;
  std::vector<std::vector<std::string>> phrases_;
};

class Vocabulary {
 public:
  std::size_t size() const { return tokens_.size(); }
  std::size_t document_count() const { return documents_; }
  std::optional<std::size_t> index_of(std::string_view token) const;
  const std::string& token(std::size_t index) const { return tokens_[index]; }
  std::size_t df(std::size_t index) const { return df_[index]; }
  double idf(std::size_t index) const { return idf_[index]; }
  const std::vector<std::vector<std::string>>& phrases() const { return phrases_; }

 private:
  friend class VocabularyBuilder;

  std::vector<std::string> tokens_;  // sorted; index = position
  std::vector<std::size_t> df_;
  std::vector<double> idf_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::string>> phrases_;
  std::size_t documents_ = 0;
};

// Streaming document-frequency counter.
class VocabularyBuilder {
 public:
  void add(std::string_view document_text);
  std::size_t documents() const { return documents_; }

  // Keeps tokens with df >= min_df, plus every constituent of a phrase
  // (phrase tokens are pinned so multi-word terms survive min_df).
  // idf = ln((1 + N) / (1 + df)) + 1. Throws Error(kEmptyCorpus) if no
  // document was added.
  Vocabulary build(std::size_t min_df, std::vector<std::vector<std::string>> phrases = {}) const;

 private:
  std::unordered_map<std::string, std::size_t> df_;
  std::size_t documents_ = 0;
};

Vocabulary build_vocabulary(std::span<const corpus::Document> docs, std::size_t min_df,
                            const TermQuery* query = nullptr);

// Sparse TF-IDF vector: entries sorted by vocabulary index, no zero weights,
// norm cached.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(std::vector<std::pair<std::size_t, double>> entries);

  const std::vector<std::pair<std::size_t, double>>& entries() const { return entries_; }
  double norm() const { return norm_; }
  bool empty() const { return entries_.empty(); }
  double weight(std::size_t index) const;
  SparseVector scaled(double factor) const;

 private:
  std::vector<std::pair<std::size_t, double>> entries_;
  double norm_ = 0.0;
};

// weight(t) = tf(t) * idf(t) with raw counts; out-of-vocabulary tokens are
// ignored. Each occurrence of a vocabulary phrase adds one more count to every
// constituent token.
SparseVector vectorize(std::string_view text, const Vocabulary& vocab);

// dot(a, b) / (|a| |b|), 0 when either norm is 0.
double cosine_similarity(const SparseVector& a, const SparseVector& b);

// Scoring backend for ranking; TF-IDF cosine is the shipped one.
class DocumentScorer {
 public:
  virtual ~DocumentScorer() = default;
  virtual double score(const corpus::Document& doc) const = 0;
};

class TfidfScorer final : public DocumentScorer {
 public:
  TfidfScorer(const TermQuery& query, const Vocabulary& vocab);
  double score(const corpus::Document& doc) const override;

 private:
  const Vocabulary& vocab_;
  SparseVector query_vector_;
};

struct RankedDoc {
  std::string id;
  double score = 0.0;

  bool operator==(const RankedDoc&) const = default;
};

struct KnnOptions {
  std::size_t workers = 0;
  // Drops documents scoring below this value after top-k selection.
  std::optional<double> min_score;
};

// Top k by (score desc, id asc). Each worker keeps a partial top-k over its
// slice; the merged result does not depend on the worker count. A k larger
// than the corpus returns every document ranked. Throws
// Error(kInvalidArgument) when k == 0.
std::vector<RankedDoc> rank_top_k(std::span<const corpus::Document> docs,
                                  const DocumentScorer& scorer, std::size_t k,
                                  const KnnOptions& opts = {});

std::vector<RankedDoc> knn_filter(std::span<const corpus::Document> docs, const TermQuery& query,
                                  const Vocabulary& vocab, std::size_t k,
                                  const KnnOptions& opts = {});

// CSV "doc_id,score" with the score printed to 6 decimals.
void write_ranked_csv(const std::filesystem::path& path, std::span<const RankedDoc> ranking);
std::vector<RankedDoc> read_ranked_csv(const std::filesystem::path& path);

}  // namespace tforge::relevance
