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
#include <cmath>
#include <map>
#include <set>
#include <unordered_set>

#include "tforge/error.hpp"
#include "tforge/relevance.hpp"
#include "tforge/text.hpp"

namespace tforge::relevance {

TermQuery::TermQuery(std::vector<std::string> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error(ErrorCode::kInvalidArgument, "empty term query");
  for (const auto& t : terms_) {
    auto toks = text::index_tokens(t);
    if (toks.empty()) throw Error(ErrorCode::kInvalidArgument, "query term without tokens: " + t);
    if (toks.size() >= 2) phrases_.push_back(std::move(toks));
  }
}

std::string TermQuery::text() const { return text::join(terms_, " "); }

std::optional<std::size_t> Vocabulary::index_of(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void VocabularyBuilder::add(std::string_view document_text) {
  ++documents_;
  auto toks = text::index_tokens(document_text);
  std::sort(toks.begin(), toks.end());
  toks.erase(std::unique(toks.begin(), toks.end()), toks.end());
  for (auto& t : toks) ++df_[std::move(t)];
}

Vocabulary VocabularyBuilder::build(std::size_t min_df,
                                    std::vector<std::vector<std::string>> phrases) const {
  if (documents_ == 0) throw Error(ErrorCode::kEmptyCorpus, "vocabulary over zero documents");
  std::set<std::string> pinned;
  for (const auto& p : phrases) pinned.insert(p.begin(), p.end());

  std::map<std::string, std::size_t> kept;
  for (const auto& [tok, df] : df_) {
    if (df >= min_df) kept.emplace(tok, df);
  }
  for (const auto& tok : pinned) {
    const auto it = df_.find(tok);
    kept.emplace(tok, it == df_.end() ? 0 : it->second);
  }

  Vocabulary v;
  v.documents_ = documents_;
  v.phrases_ = std::move(phrases);
  const double n = static_cast<double>(documents_);
  for (const auto& [tok, df] : kept) {
    v.index_.emplace(tok, v.tokens_.size());
    v.tokens_.push_back(tok);
    v.df_.push_back(df);
    v.idf_.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(df))) + 1.0);
  }
  return v;
}

Vocabulary build_vocabulary(std::span<const corpus::Document> docs, std::size_t min_df,
                            const TermQuery* query) {
  VocabularyBuilder b;
  for (const auto& d : docs) b.add(d.indexed_text());
  return b.build(min_df, query ? query->phrases() : std::vector<std::vector<std::string>>{});
}

SparseVector::SparseVector(std::vector<std::pair<std::size_t, double>> entries) {
  std::sort(entries.begin(), entries.end());
  double sq = 0.0;
  for (auto& [idx, w] : entries) {
    if (w == 0.0) continue;
    if (!entries_.empty() && entries_.back().first == idx) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate index in sparse vector");
    }
    entries_.emplace_back(idx, w);
    sq += w * w;
  }
  norm_ = std::sqrt(sq);
}

double SparseVector::weight(std::size_t index) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                                   [](const auto& e, std::size_t i) { return e.first < i; });
  return (it != entries_.end() && it->first == index) ? it->second : 0.0;
}

SparseVector SparseVector::scaled(double factor) const {
  auto copy = entries_;
  for (auto& e : copy) e.second *= factor;
  return SparseVector(std::move(copy));
}

SparseVector vectorize(std::string_view text, const Vocabulary& vocab) {
  const auto toks = text::index_tokens(text);
  std::map<std::size_t, std::size_t> tf;
  for (const auto& t : toks) {
    if (auto idx = vocab.index_of(t)) ++tf[*idx];
  }
  for (const auto& phrase : vocab.phrases()) {
    if (phrase.empty() || toks.size() < phrase.size()) continue;
    for (std::size_t i = 0; i + phrase.size() <= toks.size(); ++i) {
      if (!std::equal(phrase.begin(), phrase.end(), toks.begin() + static_cast<std::ptrdiff_t>(i))) {
        continue;
      }
      for (const auto& t : phrase) {
        if (auto idx = vocab.index_of(t)) ++tf[*idx];
      }
    }
  }
  std::vector<std::pair<std::size_t, double>> entries;
  entries.reserve(tf.size());
  for (const auto& [idx, count] : tf) {
    entries.emplace_back(idx, static_cast<double>(count) * vocab.idf(idx));
  }
  return SparseVector(std::move(entries));
}

double cosine_similarity(const SparseVector& a, const SparseVector& b) {
  if (a.norm() == 0.0 || b.norm() == 0.0) return 0.0;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  double dot = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i].first == eb[j].first) {
      dot += ea[i].second * eb[j].second;
      ++i;
      ++j;
    } else if (ea[i].first < eb[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return std::clamp(dot / (a.norm() * b.norm()), 0.0, 1.0);
}

}  // namespace tforge::relevance
