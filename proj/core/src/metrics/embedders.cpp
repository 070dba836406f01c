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
#include <set>

#include "http.hpp"
#include "json_util.hpp"
#include "tforge/error.hpp"
#include "tforge/hash.hpp"
#include "tforge/metrics.hpp"
#include "tforge/rng.hpp"

namespace tforge::metrics {

HttpEmbedder::HttpEmbedder(HttpEmbedderConfig config) : config_(std::move(config)) {
  if (config_.url.empty()) throw Error(ErrorCode::kConfig, "embedding service URL is empty");
  if (config_.batch_size == 0) throw Error(ErrorCode::kConfig, "embedding batch size is 0");
}

std::string HttpEmbedder::identity() const { return "http:" + config_.url; }

std::vector<TokenEmbeddings> HttpEmbedder::embed(std::span<const std::string> texts) {
  const auto ep = http::parse_url(config_.url);
  http::Options opts;
  opts.read_timeout = config_.timeout;
  std::vector<TokenEmbeddings> out;
  out.reserve(texts.size());
  for (std::size_t base = 0; base < texts.size(); base += config_.batch_size) {
    const auto batch = texts.subspan(base, std::min(config_.batch_size, texts.size() - base));
    const std::string body =
        jsonl::json{{"texts", std::vector<std::string>(batch.begin(), batch.end())}}.dump();
    const auto res = http::with_retries({config_.attempts, config_.initial_backoff}, [&] {
      return http::post(ep, "/embed", {}, body, "application/json", opts);
    });
    if (!res.ok()) {
      throw Error(ErrorCode::kProtocol,
                  "/embed failed: " +
                      (res.transport_ok ? "HTTP " + std::to_string(res.status) : res.error));
    }
    try {
      const auto j = jsonl::json::parse(res.body);
      const auto& results = j.at("results");
      if (results.size() != batch.size()) {
        throw Error(ErrorCode::kProtocol, "/embed returned " + std::to_string(results.size()) +
                                              " results for " + std::to_string(batch.size()) +
                                              " texts");
      }
      for (const auto& r : results) {
        TokenEmbeddings e;
        e.tokens = r.at("tokens").get<std::vector<std::string>>();
        e.vectors = r.at("vectors").get<std::vector<std::vector<double>>>();
        e.validate();
        out.push_back(std::move(e));
      }
    } catch (const jsonl::json::exception& e) {
      throw Error(ErrorCode::kProtocol, std::string("malformed /embed response: ") + e.what());
    }
  }
  return out;
}

std::string ToyEmbedder::identity() const { return "toy-hash:dim=" + std::to_string(dim_); }

std::vector<double> ToyEmbedder::token_vector(std::string_view token) const {
  SplitMix64 sm(fnv1a64(token));
  std::vector<double> v(dim_);
  double sq = 0.0;
  for (auto& x : v) {
    x = static_cast<double>(sm.next() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    sq += x * x;
  }
  const double n = std::sqrt(sq);
  for (auto& x : v) x /= n;
  return v;
}

std::vector<TokenEmbeddings> ToyEmbedder::embed(std::span<const std::string> texts) {
  std::vector<TokenEmbeddings> out;
  out.reserve(texts.size());
  for (const auto& t : texts) {
    TokenEmbeddings e;
    e.tokens = tokenize_for_rouge(t);
    for (const auto& tok : e.tokens) e.vectors.push_back(token_vector(tok));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<TokenEmbeddings> CachingEmbedder::embed(std::span<const std::string> texts) {
  std::lock_guard lock(mu_);
  std::vector<std::string> missing;
  std::set<std::string_view> queued;
  for (const auto& t : texts) {
    if (!cache_.contains(t) && queued.insert(t).second) missing.push_back(t);
  }
  if (!missing.empty()) {
    auto fresh = inner_.embed(missing);
    if (fresh.size() != missing.size()) {
      throw Error(ErrorCode::kProtocol, "embedder returned a misaligned batch");
    }
    for (std::size_t i = 0; i < missing.size(); ++i) cache_[missing[i]] = std::move(fresh[i]);
    forwarded_ += missing.size();
  }
  std::vector<TokenEmbeddings> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(cache_.find(t)->second);
  return out;
}

}  // namespace tforge::metrics
