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

#include <httplib.h>

#include <thread>

#include "tforge/error.hpp"

namespace tforge::http {
namespace {

httplib::Client make_client(const Endpoint& ep, const Options& opts) {
  httplib::Client cli(ep.origin);
  cli.set_connection_timeout(opts.connect_timeout);
  cli.set_read_timeout(opts.read_timeout);
  cli.set_follow_location(true);
  return cli;
}

httplib::Headers to_headers(const Options& opts) {
  httplib::Headers h;
  for (const auto& [k, v] : opts.headers) h.emplace(k, v);
  return h;
}

Result to_result(const httplib::Result& res) {
  Result out;
  if (!res) {
    out.error = httplib::to_string(res.error());
    return out;
  }
  out.transport_ok = true;
  out.status = res->status;
  out.body = res->body;
  return out;
}

std::string full_path(const Endpoint& ep, std::string_view path, const Params& params) {
  std::string p = ep.path_prefix;
  if (!path.empty()) {
    if (!p.empty() && p.back() == '/' && path.front() == '/') p.pop_back();
    p.append(path);
  }
  if (p.empty()) p = "/";
  if (!params.empty()) {
    httplib::Params hp(params.begin(), params.end());
    p = httplib::append_query_params(p, hp);
  }
  return p;
}

}  // namespace

Endpoint parse_url(std::string_view url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) {
    throw Error(ErrorCode::kConfig, "URL without scheme: " + std::string(url));
  }
  const auto path_start = url.find('/', scheme_end + 3);
  Endpoint ep;
  if (path_start == std::string_view::npos) {
    ep.origin = std::string(url);
  } else {
    ep.origin = std::string(url.substr(0, path_start));
    ep.path_prefix = std::string(url.substr(path_start));
    if (ep.path_prefix == "/") ep.path_prefix.clear();
  }
  return ep;
}

Result get(const Endpoint& ep, std::string_view path, const Params& params, const Options& opts) {
  auto cli = make_client(ep, opts);
  return to_result(cli.Get(full_path(ep, path, params), to_headers(opts)));
}

Result post(const Endpoint& ep, std::string_view path, const Params& params, std::string body,
            std::string_view content_type, const Options& opts) {
  auto cli = make_client(ep, opts);
  return to_result(cli.Post(full_path(ep, path, params), to_headers(opts), body,
                            std::string(content_type)));
}

Result with_retries(const RetryPolicy& policy, const std::function<Result()>& call) {
  Result last;
  auto delay = policy.initial_delay;
  for (int attempt = 0; attempt < std::max(1, policy.attempts); ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(delay);
      delay *= 2;
    }
    last = call();
    if (!last.retryable()) return last;
  }
  return last;
}

}  // namespace tforge::http
