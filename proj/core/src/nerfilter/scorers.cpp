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

#include "http.hpp"
#include "json_util.hpp"
#include "tforge/error.hpp"
#include "tforge/hash.hpp"
#include "tforge/nerfilter.hpp"

namespace tforge::ner {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kProtocol, "entity probability outside [0,1]: " + std::to_string(p));
  }
}

}  // namespace

HttpEntityScorer::HttpEntityScorer(HttpScorerConfig config) : config_(std::move(config)) {
  if (config_.url.empty()) throw Error(ErrorCode::kConfig, "entity scorer URL is empty");
}

std::vector<double> HttpEntityScorer::score(std::span<const std::string> phrases) {
  if (phrases.empty()) return {};
  const auto ep = http::parse_url(config_.url);
  const std::string body = jsonl::json{{"phrases", std::vector<std::string>(phrases.begin(),
                                                                          phrases.end())}}
                               .dump();
  http::Options opts;
  opts.read_timeout = config_.timeout;
  const auto res = http::with_retries({config_.attempts, config_.initial_backoff}, [&] {
    return http::post(ep, "/ner_score", {}, body, "application/json", opts);
  });
  if (res.retryable()) {
    throw Error(ErrorCode::kScorerUnavailable,
                "entity scorer unavailable: " +
                    (res.transport_ok ? "HTTP " + std::to_string(res.status) : res.error));
  }
  if (res.status != 200) {
    throw Error(ErrorCode::kProtocol, "entity scorer returned HTTP " + std::to_string(res.status));
  }
  std::vector<double> probs;
  try {
    probs = jsonl::json::parse(res.body).at("probs").get<std::vector<double>>();
  } catch (const jsonl::json::exception& e) {
    throw Error(ErrorCode::kProtocol, std::string("malformed /ner_score response: ") + e.what());
  }
  if (probs.size() != phrases.size()) {
    throw Error(ErrorCode::kProtocol, "/ner_score returned " + std::to_string(probs.size()) +
                                          " probabilities for " + std::to_string(phrases.size()) +
                                          " phrases");
  }
  for (double p : probs) check_probability(p);
  return probs;
}

double stub_probability(std::string_view phrase) {
  return static_cast<double>(fnv1a64(phrase) >> 11) * 0x1.0p-53;
}

std::vector<double> HashStubScorer::score(std::span<const std::string> phrases) {
  std::vector<double> out;
  out.reserve(phrases.size());
  for (const auto& p : phrases) out.push_back(stub_probability(p));
  return out;
}

TableScorer::TableScorer(const std::filesystem::path& lexicon, double default_prob)
    : default_prob_(default_prob) {
  check_probability(default_prob);
  jsonl::for_each(lexicon, [&](const jsonl::json& j) {
    const double p = j.at("prob").get<double>();
    check_probability(p);
    table_[j.at("phrase").get<std::string>()] = p;
  });
}

std::vector<double> TableScorer::score(std::span<const std::string> phrases) {
  std::vector<double> out;
  out.reserve(phrases.size());
  for (const auto& p : phrases) {
    const auto it = table_.find(p);
    out.push_back(it == table_.end() ? default_prob_ : it->second);
  }
  return out;
}

PhraseCache::PhraseCache(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.empty() || !std::filesystem::exists(path_)) return;
  jsonl::for_each(path_, [&](const jsonl::json& j) {
    entries_[j.at("phrase").get<std::string>()] = j.at("prob").get<double>();
  });
}

std::optional<double> PhraseCache::get(std::string_view phrase) const {
  std::lock_guard lock(mu_);
  const auto it = entries_.find(phrase);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void PhraseCache::put_many(std::span<const std::string> phrases, std::span<const double> probs) {
  std::lock_guard lock(mu_);
  std::optional<jsonl::Writer> out;
  if (!path_.empty()) out.emplace(path_, true);
  for (std::size_t i = 0; i < phrases.size(); ++i) {
    entries_[phrases[i]] = probs[i];
    if (out) out->write({{"phrase", phrases[i]}, {"prob", probs[i]}});
  }
}

std::size_t PhraseCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

}  // namespace tforge::ner
