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
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tforge::http {

// "http://host:port/some/prefix" split into the part httplib connects to and
// the path prefix prepended to every request.
struct Endpoint {
  std::string origin;
  std::string path_prefix;
};

Endpoint parse_url(std::string_view url);

struct Result {
  bool transport_ok = false;
  int status = 0;
  std::string body;
  std::string error;

  bool ok() const { return transport_ok && status == 200; }
  bool retryable() const { return !transport_ok || status == 429 || status >= 500; }
};

struct Options {
  std::chrono::milliseconds connect_timeout{5000};
  std::chrono::milliseconds read_timeout{60000};
  std::vector<std::pair<std::string, std::string>> headers;
};

using Params = std::vector<std::pair<std::string, std::string>>;

Result get(const Endpoint& ep, std::string_view path, const Params& params, const Options& opts);

Result post(const Endpoint& ep, std::string_view path, const Params& params, std::string body,
            std::string_view content_type, const Options& opts);

// Bounded retries with exponential backoff: attempt k (0-based) is preceded by
// a sleep of initial_delay * 2^(k-1). Stops at the first non-retryable result.
struct RetryPolicy {
  int attempts = 3;
  std::chrono::milliseconds initial_delay{1000};
};

Result with_retries(const RetryPolicy& policy, const std::function<Result()>& call);

}  // namespace tforge::http
