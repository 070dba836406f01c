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

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "tforge/error.hpp"
#include "tforge/parallel.hpp"
#include "tforge/relevance.hpp"
#include "tforge/text.hpp"

namespace tforge::relevance {
namespace {

bool ranks_before(const RankedDoc& a, const RankedDoc& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.id < b.id;
}

void keep_top(std::vector<RankedDoc>& v, std::size_t k) {
  if (v.size() > k) {
    std::partial_sort(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end(), ranks_before);
    v.resize(k);
  } else {
    std::sort(v.begin(), v.end(), ranks_before);
  }
}

}  // namespace

TfidfScorer::TfidfScorer(const TermQuery& query, const Vocabulary& vocab)
    : vocab_(vocab), query_vector_(vectorize(query.text(), vocab)) {}

double TfidfScorer::score(const corpus::Document& doc) const {
  return cosine_similarity(vectorize(doc.indexed_text(), vocab_), query_vector_);
}

std::vector<RankedDoc> rank_top_k(std::span<const corpus::Document> docs,
                                  const DocumentScorer& scorer, std::size_t k,
                                  const KnnOptions& opts) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  const std::size_t workers =
      std::max<std::size_t>(1, std::min(opts.workers ? opts.workers : default_workers(),
                                        std::max<std::size_t>(1, docs.size())));
  const std::size_t chunk = (docs.size() + workers - 1) / workers;
  std::vector<std::vector<RankedDoc>> partial(workers);
  parallel_for(workers, workers, [&](std::size_t w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(docs.size(), begin + chunk);
    auto& out = partial[w];
    for (std::size_t i = begin; i < end; ++i) out.push_back({docs[i].id, scorer.score(docs[i])});
    keep_top(out, k);
  });
  std::vector<RankedDoc> merged;
  for (auto& p : partial) merged.insert(merged.end(), p.begin(), p.end());
  keep_top(merged, k);
  if (opts.min_score) {
    std::erase_if(merged, [&](const RankedDoc& r) { return r.score < *opts.min_score; });
  }
  return merged;
}

std::vector<RankedDoc> knn_filter(std::span<const corpus::Document> docs, const TermQuery& query,
                                  const Vocabulary& vocab, std::size_t k,
                                  const KnnOptions& opts) {
  TfidfScorer scorer(query, vocab);
  return rank_top_k(docs, scorer, k, opts);
}

void write_ranked_csv(const std::filesystem::path& path, std::span<const RankedDoc> ranking) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << "doc_id,score\n";
  char buf[64];
  for (const auto& r : ranking) {
    std::snprintf(buf, sizeof buf, "%.6f", r.score);
    out << r.id << ',' << buf << '\n';
  }
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

std::vector<RankedDoc> read_ranked_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::string line;
  std::vector<RankedDoc> out;
  if (!std::getline(in, line) || text::trim(line) != "doc_id,score") {
    throw Error(ErrorCode::kMalformedInput, path.string() + ": missing doc_id,score header");
  }
  while (std::getline(in, line)) {
    if (text::trim(line).empty()) continue;
    const auto comma = line.rfind(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::kMalformedInput, path.string() + ": bad row " + line);
    }
    out.push_back({line.substr(0, comma), std::stod(line.substr(comma + 1))});
  }
  return out;
}

}  // namespace tforge::relevance
