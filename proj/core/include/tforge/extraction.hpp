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

#include "tforge/corpus.hpp"

namespace tforge::extraction {

struct Triplet {
  std::string subject;
  std::string relation;
  std::string object;
  double confidence = 1.0;
  std::string doc_id;
  std::size_t sentence_index = 0;

  bool operator==(const Triplet&) const = default;
};

// Backend output for one sentence, before provenance is attached.
struct RawTriple {
  std::string subject;
  std::string relation;
  std::string object;
  double confidence = 1.0;

  bool operator==(const RawTriple&) const = default;
};

// Splits on . ! ? (optionally followed by closing quotes or brackets) when
// followed by whitespace and an uppercase letter, digit or opening bracket.
// Known abbreviations and single-letter initials do not end a sentence.
// Returned sentences are trimmed.
std::vector<std::string> split_sentences(std::string_view text);

// Sentences of a document body: each body line is split independently and
// the results are concatenated. sentence_index refers to this list.
std::vector<std::string> document_sentences(const corpus::Document& doc);

class ExtractorBackend {
 public:
  virtual ~ExtractorBackend() = default;
  // Throws Error(kBackendError) for a failure confined to this sentence and
  // Error(kBackendUnavailable) when the backend cannot be reached at all.
  virtual std::vector<RawTriple> extract(std::string_view sentence) = 0;
  virtual std::string name() const = 0;
};

// Closed-list verb matcher. Low recall by construction; intended for
// hermetic runs and tests.
std::vector<RawTriple> naive_extract(std::string_view sentence);

class NaiveBackend final : public ExtractorBackend {
 public:
  std::vector<RawTriple> extract(std::string_view sentence) override {
    return naive_extract(sentence);
  }
  std::string name() const override { return "naive"; }
};

struct RemoteConfig {
  // Annotation server root, e.g. http://localhost:9000
  std::string url;
  std::string annotators = "tokenize,ssplit,pos,lemma,depparse,natlog,openie";
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{1000};
  std::chrono::milliseconds timeout{120000};
};

// POSTs the raw sentence with a properties query parameter and reads
// sentences[*].openie[*].{subject,relation,object,confidence}. A missing
// confidence is read as 1.0.
class RemoteBackend final : public ExtractorBackend {
 public:
  explicit RemoteBackend(RemoteConfig config);
  std::vector<RawTriple> extract(std::string_view sentence) override;
  std::string name() const override { return "remote"; }

 private:
  RemoteConfig config_;
};

std::vector<RawTriple> parse_openie_response(std::string_view body);

// Wraps a backend and appends every answer to a JSON-lines recording
// {"sentence", "triples"} or {"sentence", "error"}.
class RecordingBackend final : public ExtractorBackend {
 public:
  RecordingBackend(ExtractorBackend& inner, std::filesystem::path recording);
  std::vector<RawTriple> extract(std::string_view sentence) override;
  std::string name() const override { return "recording:" + inner_.name(); }

 private:
  ExtractorBackend& inner_;
  std::filesystem::path path_;
  std::mutex mu_;
};

// Serves answers from a recording keyed by exact sentence text. Recorded
// errors and unknown sentences raise Error(kBackendError).
class ReplayBackend final : public ExtractorBackend {
 public:
  explicit ReplayBackend(const std::filesystem::path& recording);
  std::vector<RawTriple> extract(std::string_view sentence) override;
  std::string name() const override { return "replay"; }
  std::size_t size() const { return answers_.size(); }

 private:
  struct Answer {
    bool error = false;
    std::vector<RawTriple> triples;
  };
  std::map<std::string, Answer, std::less<>> answers_;
};

struct ExtractStats {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::size_t triplets = 0;
  std::size_t failed_sentences = 0;
  std::size_t below_min_confidence = 0;
  std::size_t resumed_documents = 0;
};

struct ExtractOptions {
  double min_confidence = 0.0;
  std::size_t workers = 0;
};

// Ordered by (sentence_index, backend order). Triplets with an empty phrase
// after trimming or confidence outside [0,1] are dropped.
std::vector<Triplet> extract_triplets(const corpus::Document& doc, ExtractorBackend& backend,
                                      const ExtractOptions& opts = {},
                                      ExtractStats* stats = nullptr);

// Extracts every document and writes triplets to out_jsonl in doc-id order.
// Progress is checkpointed to out_jsonl + ".progress" after each document;
// with resume=true, completed documents are skipped and a partially written
// tail is truncated.
ExtractStats extract_corpus(std::span<const corpus::Document> docs, ExtractorBackend& backend,
                            const std::filesystem::path& out_jsonl, const ExtractOptions& opts,
                            bool resume);

void write_triplets(const std::filesystem::path& path, std::span<const Triplet> triplets);
std::vector<Triplet> read_triplets(const std::filesystem::path& path);

}  // namespace tforge::extraction
