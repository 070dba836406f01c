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

#include <ctime>
#include <regex>
#include <thread>

#include "http.hpp"
#include "json_util.hpp"
#include "tforge/error.hpp"
#include "tforge/license.hpp"
#include "tforge/parallel.hpp"
#include "tforge/text.hpp"

namespace tforge::license {
namespace {

std::string utc_now_iso8601() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::optional<std::string> find_field(const jsonl::json& j, std::string_view field) {
  if (j.is_object()) {
    if (j.contains("error")) return std::nullopt;
    const auto it = j.find(std::string(field));
    if (it != j.end() && it->is_string()) return it->get<std::string>();
    for (const char* nested : {"records", "result", "results"}) {
      if (j.contains(nested)) return find_field(j.at(nested), field);
    }
  } else if (j.is_array() && !j.empty()) {
    return find_field(j.front(), field);
  }
  return std::nullopt;
}

}  // namespace

std::vector<LicenseTag> LicenseResolver::resolve_many(std::span<const std::string> ids) {
  std::vector<LicenseTag> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(resolve(id));
  return out;
}

LicenseTag MapResolver::resolve(std::string_view id) {
  const auto it = table_.find(id);
  return it == table_.end() ? LicenseTag::kUnknown : it->second;
}

LicenseCache::LicenseCache(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.empty() || !std::filesystem::exists(path_)) return;
  jsonl::for_each(path_, [&](const jsonl::json& j) {
    const auto id = j.value("id", "");
    const auto tag = corpus::parse_license_name(j.value("license", ""));
    if (id.empty() || !tag) {
      throw Error(ErrorCode::kMalformedInput, "bad license cache line in " + path_.string());
    }
    entries_[id] = *tag;
  });
}

std::optional<LicenseTag> LicenseCache::get(std::string_view id) const {
  std::lock_guard lock(mu_);
  const auto it = entries_.find(id);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void LicenseCache::put(const std::string& id, LicenseTag tag) {
  std::lock_guard lock(mu_);
  entries_[id] = tag;
  if (path_.empty()) return;
  jsonl::Writer out(path_, /*append=*/true);
  out.write({{"id", id},
             {"license", std::string(corpus::license_name(tag))},
             {"fetched_at", utc_now_iso8601()}});
}

std::size_t LicenseCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

std::optional<std::string> parse_registry_response(std::string_view body,
                                                   std::string_view license_field) {
  const auto trimmed = text::trim(body);
  if (trimmed.empty()) return std::nullopt;
  if (trimmed.front() == '{' || trimmed.front() == '[') {
    jsonl::json j;
    try {
      j = jsonl::json::parse(trimmed);
    } catch (const jsonl::json::exception& e) {
      throw Error(ErrorCode::kProtocol, std::string("registry JSON: ") + e.what());
    }
    return find_field(j, license_field);
  }
  if (trimmed.find("<error") != std::string_view::npos) return std::nullopt;
  static const std::regex kLicenseAttr(R"re(\blicense\s*=\s*"([^"]*)")re");
  std::cmatch m;
  if (std::regex_search(trimmed.data(), trimmed.data() + trimmed.size(), m, kLicenseAttr)) {
    return m[1].str();
  }
  return std::nullopt;
}

RegistryLicenseResolver::RegistryLicenseResolver(RegistryConfig config,
                                                 std::filesystem::path cache_path)
    : config_(std::move(config)), cache_(std::move(cache_path)) {}

LicenseTag RegistryLicenseResolver::fetch(const std::string& id) {
  if (config_.offline || config_.base_url.empty()) {
    throw Error(ErrorCode::kResolverUnavailable,
                "license for " + id + " not cached and the registry is offline");
  }
  const auto ep = http::parse_url(config_.base_url);
  http::Params params = {{config_.id_param, id}};
  if (!config_.api_key.empty()) params.emplace_back(config_.api_key_param, config_.api_key);
  http::Options opts;
  opts.read_timeout = config_.timeout;
  const auto res = http::with_retries({config_.attempts, config_.initial_backoff}, [&] {
    ++requests_;
    return http::get(ep, "", params, opts);
  });
  if (res.transport_ok && res.status == 404) return LicenseTag::kUnknown;
  if (!res.ok()) {
    throw Error(ErrorCode::kResolverUnavailable,
                "registry request for " + id + " failed: " +
                    (res.transport_ok ? "HTTP " + std::to_string(res.status) : res.error));
  }
  const auto designator = parse_registry_response(res.body, config_.license_field);
  return designator ? corpus::classify_license(*designator) : LicenseTag::kUnknown;
}

LicenseTag RegistryLicenseResolver::resolve(std::string_view id) {
  if (id.empty()) throw Error(ErrorCode::kInvalidArgument, "empty article id");
  if (auto cached = cache_.get(id)) return *cached;
  const std::string key(id);
  const auto tag = fetch(key);
  cache_.put(key, tag);
  return tag;
}

std::vector<LicenseTag> RegistryLicenseResolver::resolve_many(std::span<const std::string> ids) {
  std::vector<LicenseTag> out(ids.size(), LicenseTag::kUnknown);
  std::vector<std::size_t> misses;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i].empty()) throw Error(ErrorCode::kInvalidArgument, "empty article id");
    if (auto cached = cache_.get(ids[i])) {
      out[i] = *cached;
    } else {
      misses.push_back(i);
    }
  }
  if (misses.empty()) return out;
  // Each of the max_concurrency slots waits politeness_delay after a request.
  parallel_for(misses.size(), std::max<std::size_t>(1, config_.max_concurrency),
               [&](std::size_t k) {
                 const auto& id = ids[misses[k]];
                 out[misses[k]] = fetch(id);
                 cache_.put(id, out[misses[k]]);
                 std::this_thread::sleep_for(config_.politeness_delay);
               });
  return out;
}

}  // namespace tforge::license
