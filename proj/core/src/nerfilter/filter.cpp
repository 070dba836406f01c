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
#include <set>
#include <tuple>
#include <unordered_map>

#include "json_util.hpp"
#include "tforge/error.hpp"
#include "tforge/nerfilter.hpp"
#include "tforge/parallel.hpp"

namespace tforge::ner {

std::vector<ScoredTriplet> score_triplets(std::span<const Triplet> triplets, EntityScorer& scorer,
                                          const ScoreOptions& opts, PhraseCache* cache,
                                          ScoreStats* stats) {
  if (opts.batch_size == 0) throw Error(ErrorCode::kInvalidArgument, "batch_size must be >= 1");
  std::unordered_map<std::string, double> probs;
  std::vector<std::string> pending;
  ScoreStats local;
  auto want = [&](const std::string& phrase) {
    if (probs.contains(phrase)) return;
    ++local.unique_phrases;
    if (cache) {
      if (auto hit = cache->get(phrase)) {
        probs.emplace(phrase, *hit);
        ++local.cache_hits;
        return;
      }
    }
    probs.emplace(phrase, -1.0);
    pending.push_back(phrase);
  };
  for (const auto& t : triplets) {
    want(t.subject);
    want(t.object);
  }

  const std::size_t n_batches = (pending.size() + opts.batch_size - 1) / opts.batch_size;
  std::vector<std::vector<double>> answers(n_batches);
  parallel_for(n_batches, std::max<std::size_t>(1, opts.max_in_flight), [&](std::size_t b) {
    const std::size_t begin = b * opts.batch_size;
    const std::size_t end = std::min(pending.size(), begin + opts.batch_size);
    std::span<const std::string> batch(pending.data() + begin, end - begin);
    auto result = scorer.score(batch);
    if (result.size() != batch.size()) {
      throw Error(ErrorCode::kProtocol, "scorer returned a misaligned batch");
    }
    if (cache) cache->put_many(batch, result);
    answers[b] = std::move(result);
  });
  local.batches = n_batches;
  for (std::size_t b = 0; b < n_batches; ++b) {
    for (std::size_t k = 0; k < answers[b].size(); ++k) {
      probs[pending[b * opts.batch_size + k]] = answers[b][k];
    }
  }

  std::vector<ScoredTriplet> out;
  out.reserve(triplets.size());
  for (const auto& t : triplets) out.push_back({t, probs.at(t.subject), probs.at(t.object)});
  if (stats) *stats = local;
  return out;
}

std::vector<Triplet> filter_scored(std::span<const ScoredTriplet> scored, double threshold,
                                   FilterFunnel* funnel) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must lie in [0,1]");
  }
  std::vector<Triplet> kept;
  for (const auto& s : scored) {
    if (s.subject_prob > threshold && s.object_prob > threshold) kept.push_back(s.triplet);
  }
  if (funnel) *funnel = {scored.size(), kept.size(), scored.size() - kept.size()};
  return kept;
}

std::vector<Triplet> dedup_triplets(std::span<const Triplet> triplets) {
  std::set<std::tuple<std::string_view, std::string_view, std::string_view>> seen;
  std::vector<Triplet> out;
  for (const auto& t : triplets) {
    if (seen.emplace(t.subject, t.relation, t.object).second) out.push_back(t);
  }
  return out;
}

void write_scored(const std::filesystem::path& path, std::span<const ScoredTriplet> scored) {
  jsonl::Writer out(path);
  for (const auto& s : scored) {
    const auto& t = s.triplet;
    out.write({{"doc_id", t.doc_id},
               {"sentence_index", t.sentence_index},
               {"subject", t.subject},
               {"relation", t.relation},
               {"object", t.object},
               {"confidence", t.confidence},
               {"subject_prob", s.subject_prob},
               {"object_prob", s.object_prob}});
  }
}

std::vector<ScoredTriplet> read_scored(const std::filesystem::path& path) {
  std::vector<ScoredTriplet> out;
  jsonl::for_each(path, [&](const jsonl::json& j) {
    try {
      ScoredTriplet s;
      s.triplet.doc_id = j.at("doc_id").get<std::string>();
      s.triplet.sentence_index = j.at("sentence_index").get<std::size_t>();
      s.triplet.subject = j.at("subject").get<std::string>();
      s.triplet.relation = j.at("relation").get<std::string>();
      s.triplet.object = j.at("object").get<std::string>();
      s.triplet.confidence = j.value("confidence", 1.0);
      s.subject_prob = j.at("subject_prob").get<double>();
      s.object_prob = j.at("object_prob").get<double>();
      out.push_back(std::move(s));
    } catch (const jsonl::json::exception& e) {
      throw Error(ErrorCode::kMalformedInput, path.string() + ": " + e.what());
    }
  });
  return out;
}

}  // namespace tforge::ner
