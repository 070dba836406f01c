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

#include <gtest/gtest.h>
#include <json.hpp>

#include <chrono>
#include <set>

#include "tforge/corpus.hpp"
#include "tforge/error.hpp"
#include "tforge/license.hpp"
#include "test_support.hpp"

using namespace tforge;
using namespace tforge::license;
using corpus::Document;
using nlohmann::json;
using std::chrono::milliseconds;

namespace {

RegistryConfig fast_config(const std::string& url) {
  RegistryConfig c;
  c.base_url = url;
  c.politeness_delay = milliseconds(0);
  c.initial_backoff = milliseconds(1);
  c.timeout = milliseconds(5000);
  return c;
}

// Serves the recorded OA answers keyed by the id query parameter.
void serve_recordings(testkit::StubServer& stub, const json& recordings) {
  stub.server().Get("/oa", [&stub, recordings](const httplib::Request& req, httplib::Response& res) {
    ++stub.hits();
    const auto id = req.get_param_value("id");
    if (!recordings.contains(id)) {
      res.status = 404;
      return;
    }
    res.set_content(recordings[id]["body"].get<std::string>(), "text/xml");
  });
}

}  // namespace

TEST(RegistryParse, XmlAndJsonShapes) {
  EXPECT_EQ(parse_registry_response(R"(<OA><record id="P" license="CC0"/></OA>)", "license"), "CC0");
  EXPECT_FALSE(parse_registry_response(R"(<OA><error code="x">no</error></OA>)", "license"));
  EXPECT_EQ(parse_registry_response(R"({"license":"CC BY"})", "license"), "CC BY");
  EXPECT_EQ(parse_registry_response(R"({"records":[{"license":"CC0"}]})", "license"), "CC0");
  EXPECT_FALSE(parse_registry_response(R"({"error":"not found"})", "license"));
  EXPECT_THROW(parse_registry_response("{broken", "license"), Error);
}

TEST(RegistryResolver, RecordedAnswersForTenAccessions) {
  const auto recordings =
      json::parse(testkit::read_file(testkit::data_dir() / "registry/oa_responses.json"));
  ASSERT_EQ(recordings.size(), 10u);
  testkit::StubServer stub;
  serve_recordings(stub, recordings);
  stub.start();
  testkit::TempDir dir;
  RegistryLicenseResolver resolver(fast_config(stub.url() + "/oa"), dir / "cache.jsonl");
  std::vector<std::string> ids;
  for (const auto& [id, _] : recordings.items()) ids.push_back(id);
  const auto tags = resolver.resolve_many(ids);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    EXPECT_EQ(corpus::license_name(tags[i]), recordings[ids[i]]["expected"].get<std::string>())
        << ids[i];
  }
  EXPECT_EQ(resolver.network_requests(), 10u);

  // A second resolver over the same cache file never touches the network.
  RegistryLicenseResolver again(fast_config(stub.url() + "/oa"), dir / "cache.jsonl");
  EXPECT_EQ(again.resolve_many(ids), tags);
  EXPECT_EQ(again.network_requests(), 0u);
  EXPECT_EQ(stub.hits().load(), 10);
}

TEST(RegistryResolver, NotFoundMeansUnknown) {
  testkit::StubServer stub;
  serve_recordings(stub, json::object());
  stub.start();
  RegistryLicenseResolver resolver(fast_config(stub.url() + "/oa"), "");
  EXPECT_EQ(resolver.resolve("PMC404"), LicenseTag::kUnknown);
}

TEST(RegistryResolver, ServerErrorsRetryThenFail) {
  testkit::StubServer stub;
  stub.server().Get("/oa", [&stub](const httplib::Request&, httplib::Response& res) {
    ++stub.hits();
    res.status = 503;
  });
  stub.start();
  RegistryLicenseResolver resolver(fast_config(stub.url() + "/oa"), "");
  try {
    resolver.resolve("PMC1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResolverUnavailable);
  }
  EXPECT_EQ(stub.hits().load(), 3);
}

TEST(RegistryResolver, TransientFailureRecovers) {
  testkit::StubServer stub;
  stub.server().Get("/oa", [&stub](const httplib::Request&, httplib::Response& res) {
    if (++stub.hits() == 1) {
      res.status = 500;
      return;
    }
    res.set_content(R"(<OA><record id="PMC1" license="CC0"/></OA>)", "text/xml");
  });
  stub.start();
  RegistryLicenseResolver resolver(fast_config(stub.url() + "/oa"), "");
  EXPECT_EQ(resolver.resolve("PMC1"), LicenseTag::kCC0);
  EXPECT_EQ(stub.hits().load(), 2);
}

TEST(RegistryResolver, SendsApiKey) {
  testkit::StubServer stub;
  std::string seen;
  stub.server().Get("/oa", [&seen](const httplib::Request& req, httplib::Response& res) {
    seen = req.get_param_value("api_key");
    res.set_content(R"({"license":"CC0"})", "application/json");
  });
  stub.start();
  auto cfg = fast_config(stub.url() + "/oa");
  cfg.api_key = "secret";
  RegistryLicenseResolver resolver(cfg, "");
  EXPECT_EQ(resolver.resolve("PMC1"), LicenseTag::kCC0);
  EXPECT_EQ(seen, "secret");
}

TEST(RegistryResolver, OfflineMissIsUnavailable) {
  RegistryConfig cfg;
  cfg.offline = true;
  RegistryLicenseResolver resolver(cfg, "");
  EXPECT_THROW(resolver.resolve("PMC1"), Error);
}

TEST(RegistryResolver, PolitenessDelayBoundsRate) {
  testkit::StubServer stub;
  stub.server().Get("/oa", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"license":"CC0"})", "application/json");
  });
  stub.start();
  auto cfg = fast_config(stub.url() + "/oa");
  cfg.max_concurrency = 2;
  cfg.politeness_delay = milliseconds(40);
  RegistryLicenseResolver resolver(cfg, "");
  const std::vector<std::string> ids = {"a", "b", "c", "d", "e", "f"};
  const auto t0 = std::chrono::steady_clock::now();
  resolver.resolve_many(ids);
  const auto elapsed = std::chrono::steady_clock::now() - t0;
  // Six requests over two slots: at least three delays per slot.
  EXPECT_GE(elapsed, milliseconds(110));
}

TEST(LicenseCache, LastLineWinsAndMalformedRaises) {
  testkit::TempDir dir;
  testkit::write_file(dir / "c.jsonl",
                      "{\"id\":\"A\",\"license\":\"CC_BY\"}\n{\"id\":\"A\",\"license\":\"CC0\"}\n");
  LicenseCache cache(dir / "c.jsonl");
  EXPECT_EQ(cache.get("A"), LicenseTag::kCC0);
  EXPECT_EQ(cache.size(), 1u);
  cache.put("B", LicenseTag::kCC_BY_NC);
  EXPECT_EQ(LicenseCache(dir / "c.jsonl").get("B"), LicenseTag::kCC_BY_NC);
  testkit::write_file(dir / "bad.jsonl", "{\"id\":\"A\",\"license\":\"MIT-ish\"}\n");
  EXPECT_THROW(LicenseCache(dir / "bad.jsonl"), Error);
}

TEST(LicenseFilter, FixtureCorpusKeepsThirtyCc0) {
  const auto docs = corpus::load_corpus(testkit::data_dir() / "corpus200/corpus").documents;
  // Documents outside the recorded cache carry no registry answer.
  struct CacheOrUnknown final : LicenseResolver {
    LicenseCache cache{testkit::data_dir() / "corpus200/license_cache.jsonl"};
    LicenseTag resolve(std::string_view id) override {
      return cache.get(id).value_or(LicenseTag::kUnknown);
    }
  } resolver;
  const auto r = filter_by_license(docs, {LicenseTag::kCC0}, resolver);
  EXPECT_EQ(r.funnel.input, 200u);
  EXPECT_EQ(r.funnel.kept, 30u);
  EXPECT_EQ(r.kept.size(), 30u);
  EXPECT_EQ(r.decisions.size(), 200u);
  for (const auto& d : r.kept) EXPECT_EQ(d.license, LicenseTag::kCC0);
}

TEST(LicenseFilter, UnknownIsRejectedAndAllowedSetIsConfigurable) {
  std::vector<Document> docs = {{"a", "", "x", LicenseTag::kCC0, ""},
                                {"b", "", "x", LicenseTag::kCC_BY, ""},
                                {"c", "", "x", LicenseTag::kUnknown, ""},
                                {"d", "", "x", LicenseTag::kUnknown, ""}};
  MapResolver resolver({{"c", LicenseTag::kCC_BY}});
  auto r = filter_by_license(docs, {LicenseTag::kCC0, LicenseTag::kCC_BY}, resolver);
  std::vector<std::string> kept;
  for (const auto& d : r.kept) kept.push_back(d.id);
  EXPECT_EQ(kept, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(r.funnel.resolved_by_registry, 2u);
  EXPECT_THROW(filter_by_license(docs, {}, resolver), Error);
}
