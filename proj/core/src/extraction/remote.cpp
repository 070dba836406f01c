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

#include "http.hpp"
#include "json_util.hpp"
#include "tforge/error.hpp"
#include "tforge/extraction.hpp"
#include "tforge/text.hpp"

namespace tforge::extraction {
namespace {

RawTriple triple_from_json(const jsonl::json& j) {
  RawTriple t;
  t.subject = j.at("subject").get<std::string>();
  t.relation = j.at("relation").get<std::string>();
  t.object = j.at("object").get<std::string>();
  if (j.contains("confidence") && !j.at("confidence").is_null()) {
    t.confidence = j.at("confidence").get<double>();
  }
  return t;
}

jsonl::json triple_to_json(const RawTriple& t) {
  return {{"subject", t.subject},
          {"relation", t.relation},
          {"object", t.object},
          {"confidence", t.confidence}};
}

}  // namespace

std::vector<RawTriple> parse_openie_response(std::string_view body) {
  std::vector<RawTriple> out;
  try {
    const auto j = jsonl::json::parse(body);
    const auto& sentences = j.is_array() ? j : j.at("sentences");
    for (const auto& s : sentences) {
      const auto it = s.find("openie");
      if (it == s.end()) continue;
      for (const auto& t : *it) out.push_back(triple_from_json(t));
    }
  } catch (const jsonl::json::exception& e) {
    throw Error(ErrorCode::kBackendError, std::string("malformed OpenIE response: ") + e.what());
  }
  return out;
}

RemoteBackend::RemoteBackend(RemoteConfig config) : config_(std::move(config)) {
  if (config_.url.empty()) throw Error(ErrorCode::kConfig, "OpenIE backend URL is empty");
}

std::vector<RawTriple> RemoteBackend::extract(std::string_view sentence) {
  const auto ep = http::parse_url(config_.url);
  const jsonl::json props = {{"annotators", config_.annotators},
                             {"outputFormat", "json"},
                             {"ssplit.isOneSentence", "true"}};
  http::Options opts;
  opts.read_timeout = config_.timeout;
  const auto res = http::with_retries({config_.attempts, config_.initial_backoff}, [&] {
    return http::post(ep, "/", {{"properties", props.dump()}}, std::string(sentence),
                      "text/plain; charset=utf-8", opts);
  });
  if (!res.transport_ok || res.status == 503) {
    throw Error(ErrorCode::kBackendUnavailable,
                "OpenIE server unreachable: " +
                    (res.transport_ok ? "HTTP " + std::to_string(res.status) : res.error));
  }
  if (res.status != 200) {
    throw Error(ErrorCode::kBackendError, "OpenIE server returned HTTP " + std::to_string(res.status));
  }
  return parse_openie_response(res.body);
}

RecordingBackend::RecordingBackend(ExtractorBackend& inner, std::filesystem::path recording)
    : inner_(inner), path_(std::move(recording)) {}

std::vector<RawTriple> RecordingBackend::extract(std::string_view sentence) {
  jsonl::json line = {{"sentence", std::string(sentence)}};
  try {
    auto triples = inner_.extract(sentence);
    auto arr = jsonl::json::array();
    for (const auto& t : triples) arr.push_back(triple_to_json(t));
    line["triples"] = std::move(arr);
    std::lock_guard lock(mu_);
    jsonl::Writer(path_, true).write(line);
    return triples;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBackendError) throw;
    line["error"] = e.what();
    std::lock_guard lock(mu_);
    jsonl::Writer(path_, true).write(line);
    throw;
  }
}

ReplayBackend::ReplayBackend(const std::filesystem::path& recording) {
  jsonl::for_each(recording, [&](const jsonl::json& j) {
    Answer a;
    a.error = j.contains("error");
    if (!a.error) {
      for (const auto& t : j.at("triples")) a.triples.push_back(triple_from_json(t));
    }
    answers_[j.at("sentence").get<std::string>()] = std::move(a);
  });
}

std::vector<RawTriple> ReplayBackend::extract(std::string_view sentence) {
  const auto it = answers_.find(sentence);
  if (it == answers_.end()) {
    throw Error(ErrorCode::kBackendError, "no recorded answer for sentence");
  }
  if (it->second.error) throw Error(ErrorCode::kBackendError, "recorded backend error");
  return it->second.triples;
}

}  // namespace tforge::extraction
