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

#include <atomic>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tforge/corpus.hpp"

namespace tforge::license {

using corpus::LicenseTag;

class LicenseResolver {
 public:
  virtual ~LicenseResolver() = default;
  virtual LicenseTag resolve(std::string_view id) = 0;
  // Same order as ids. The default resolves one at a time.
  virtual std::vector<LicenseTag> resolve_many(std::span<const std::string> ids);
};

// Fixed id -> tag table; ids not present resolve to kUnknown.
class MapResolver final : public LicenseResolver {
 public:
  explicit MapResolver(std::map<std::string, LicenseTag, std::less<>> table)
      : table_(std::move(table)) {}
  LicenseTag resolve(std::string_view id) override;

 private:
  std::map<std::string, LicenseTag, std::less<>> table_;
};

// Append-only JSON-lines cache {"id","license","fetched_at"}; the last line
// for an id wins. Thread-safe; writes are serialized.
class LicenseCache {
 public:
  explicit LicenseCache(std::filesystem::path path);

  std::optional<LicenseTag> get(std::string_view id) const;
  void put(const std::string& id, LicenseTag tag);
  std::size_t size() const;

 private:
  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::map<std::string, LicenseTag, std::less<>> entries_;
};

struct RegistryConfig {
  // e.g. https://www.ncbi.nlm.nih.gov/pmc/utils/oa/oa.fcgi
  std::string base_url;
  std::string id_param = "id";
  std::string api_key;
  std::string api_key_param = "api_key";
  // JSON responses: field holding the designator. XML responses are searched
  // for a license="..." attribute.
  std::string license_field = "license";
  std::size_t max_concurrency = 4;
  std::chrono::milliseconds politeness_delay{350};
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{1000};
  std::chrono::milliseconds timeout{30000};
  // Never touch the network; a cache miss raises ResolverUnavailable.
  bool offline = false;
};

// Designator found in a registry response body, or nullopt when the record
// is missing (error element, error field, or no license designator).
std::optional<std::string> parse_registry_response(std::string_view body,
                                                   std::string_view license_field);

// Registry client with an on-disk cache. HTTP 404 and "not found" bodies map
// to kUnknown (and are cached). Transport failures and 5xx responses are
// retried (attempts, exponential backoff); afterwards, and on any other
// non-200 status, Error(kResolverUnavailable) is thrown.
class RegistryLicenseResolver final : public LicenseResolver {
 public:
  RegistryLicenseResolver(RegistryConfig config, std::filesystem::path cache_path);

  LicenseTag resolve(std::string_view id) override;
  std::vector<LicenseTag> resolve_many(std::span<const std::string> ids) override;

  std::size_t network_requests() const { return requests_.load(); }
  const LicenseCache& cache() const { return cache_; }

 private:
  LicenseTag fetch(const std::string& id);

  RegistryConfig config_;
  LicenseCache cache_;
  std::atomic<std::size_t> requests_{0};
};

struct LicenseFunnel {
  std::size_t input = 0;
  std::size_t kept = 0;
  std::size_t resolved_by_registry = 0;
};

struct LicenseDecision {
  std::string id;
  LicenseTag tag = LicenseTag::kUnknown;
  bool kept = false;
};

struct LicenseFilterResult {
  std::vector<corpus::Document> kept;
  std::vector<LicenseDecision> decisions;
  LicenseFunnel funnel;
};

// Documents whose in-document license is kUnknown are resolved through the
// resolver; a document is kept iff its resolved tag is in 'allowed'. kUnknown
// after resolution is rejected. Kept documents carry the resolved tag.
// Throws Error(kInvalidArgument) when allowed is empty.
LicenseFilterResult filter_by_license(std::vector<corpus::Document> docs,
                                      const std::set<LicenseTag>& allowed,
                                      LicenseResolver& resolver);

}  // namespace tforge::license
