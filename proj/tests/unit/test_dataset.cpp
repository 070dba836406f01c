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

#include <set>

#include "tforge/dataset.hpp"
#include "tforge/error.hpp"
#include "tforge/hash.hpp"
#include "tforge/rng.hpp"
#include "test_support.hpp"

using namespace tforge;
using namespace tforge::dataset;
using nlohmann::json;

namespace {

std::vector<Triple> fixture_triples(std::size_t n) {
  std::vector<Triple> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({"subject " + std::to_string(i), "rel" + std::to_string(i % 37),
                   "object " + std::to_string((i * 7919) % n)});
  }
  return out;
}

json golden() { return json::parse(testkit::read_file(testkit::data_dir() / "dataset_golden.json")); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kConfig;
}

}  // namespace

TEST(Split, GoldenHashesAndShape) {
  const auto parts = shuffle_and_split(fixture_triples(11200), {});
  EXPECT_EQ(parts.train.size(), 10000u);
  EXPECT_EQ(parts.test.size(), 1000u);
  EXPECT_EQ(parts.validation.size(), 200u);
  const auto g = golden()["split_seed42_hashes"];
  EXPECT_EQ(sha256_hex(to_csv(parts.train)), g["train"].get<std::string>());
  EXPECT_EQ(sha256_hex(to_csv(parts.test)), g["test"].get<std::string>());
  EXPECT_EQ(sha256_hex(to_csv(parts.validation)), g["validation"].get<std::string>());
  std::set<Triple> seen;
  for (const auto* part : {&parts.train, &parts.test, &parts.validation}) {
    for (const auto& t : *part) EXPECT_TRUE(seen.insert(t).second);
  }
  EXPECT_EQ(seen.size(), 11200u);
}

TEST(Split, SeedChangesOrderAndIsStable) {
  SplitSpec a{100, 10, 5, 1}, b{100, 10, 5, 2};
  const auto records = fixture_triples(200);
  EXPECT_EQ(to_csv(shuffle_and_split(records, a).train), to_csv(shuffle_and_split(records, a).train));
  EXPECT_NE(to_csv(shuffle_and_split(records, a).train), to_csv(shuffle_and_split(records, b).train));
}

TEST(Split, InsufficientRecords) {
  EXPECT_EQ(code_of([] { shuffle_and_split(fixture_triples(100), {90, 10, 1, 42}); }),
            ErrorCode::kInsufficientRecords);
  EXPECT_NO_THROW(shuffle_and_split(fixture_triples(101), {90, 10, 1, 42}));
}

TEST(Csv, QuotingRules) {
  const std::vector<Triple> rows = {{"a", "b", "c"}, {"x,y", "say \"hi\"", "line\nbreak"}};
  EXPECT_EQ(to_csv(rows),
            "subject,relation,object\na,b,c\n\"x,y\",\"say \"\"hi\"\"\",\"line\nbreak\"\n");
}

TEST(Csv, ThousandRecordRoundTripIsByteIdentical) {
  Xoshiro256 rng(1000);
  const std::string alphabet = "abc XYZ,\"\r\n\xC3\xA9-";
  auto field = [&] {
    std::string s;
    const auto len = 1 + rng.bounded(12);
    for (std::uint64_t k = 0; k < len; ++k) {
      const auto c = rng.bounded(alphabet.size() - 1);
      if (alphabet[c] == '\xC3') {
        s += "\xC3\xA9";
      } else if (alphabet[c] != '\xA9') {
        s.push_back(alphabet[c]);
      }
    }
    return s.empty() ? std::string("x") : s;
  };
  std::vector<Triple> rows;
  for (int i = 0; i < 1000; ++i) rows.push_back({field(), field(), field()});
  testkit::TempDir dir;
  write_split_csv(rows, dir / "a.csv");
  const auto back = read_split_csv(dir / "a.csv");
  EXPECT_EQ(back, rows);
  write_split_csv(back, dir / "b.csv");
  EXPECT_EQ(testkit::read_file(dir / "a.csv"), testkit::read_file(dir / "b.csv"));
}

TEST(Csv, AcceptsBomAndCrlf) {
  const auto rows = parse_csv("\xEF\xBB\xBFsubject,relation,object\r\na,b,c\r\n\"d\r\ne\",f,g\r\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (Triple{"a", "b", "c"}));
  EXPECT_EQ(rows[1].subject, "d\r\ne");
}

TEST(Csv, MalformedInputs) {
  EXPECT_EQ(code_of([] { parse_csv("s,r,o\na,b,c\n"); }), ErrorCode::kMalformedInput);
  EXPECT_EQ(code_of([] { parse_csv("subject,relation,object\na,b\n"); }), ErrorCode::kMalformedInput);
  EXPECT_EQ(code_of([] { parse_csv("subject,relation,object\n\"a,b,c\n"); }),
            ErrorCode::kMalformedInput);
}

TEST(Randomize, SeedSevenMatchesGoldenPermutation) {
  const auto g = golden()["randomize_seed7"];
  const auto records = fixture_triples(200);
  const auto r = randomize_gold(records, 7);
  EXPECT_EQ(r.permutation, g["permutation"].get<std::vector<std::size_t>>());
  EXPECT_EQ(r.fixed_points, g["fixed_points"].get<std::size_t>());
  EXPECT_LE(r.fixed_points, 2u);
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(r.records[i].subject, records[i].subject);
    EXPECT_EQ(r.records[i].relation, records[i].relation);
    EXPECT_EQ(r.records[i].object, records[r.permutation[i]].object);
  }
}

TEST(Randomize, PoolDrawsFromLargerSet) {
  const auto records = fixture_triples(50);
  auto pool = fixture_triples(500);
  for (auto& p : pool) p.object = "pool " + p.object;
  const auto r = randomize_gold_from_pool(records, pool, 3);
  EXPECT_EQ(r.permutation.size(), 50u);
  std::set<std::size_t> distinct(r.permutation.begin(), r.permutation.end());
  EXPECT_EQ(distinct.size(), 50u);
  EXPECT_EQ(r.unchanged_objects, 0u);
  EXPECT_EQ(r.records[0].object.rfind("pool ", 0), 0u);
  EXPECT_EQ(code_of([&] { randomize_gold_from_pool(records, fixture_triples(10), 3); }),
            ErrorCode::kTooFewRecords);
}

TEST(Randomize, TooFewRecords) {
  EXPECT_EQ(code_of([] { randomize_gold(fixture_triples(1), 1); }), ErrorCode::kTooFewRecords);
  EXPECT_NO_THROW(randomize_gold(fixture_triples(2), 1));
}
