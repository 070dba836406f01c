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

#include <algorithm>
#include <numeric>

#include "tforge/hash.hpp"
#include "tforge/parallel.hpp"
#include "tforge/rng.hpp"
#include "tforge/text.hpp"
#include "test_support.hpp"

using nlohmann::json;
using namespace tforge;

namespace {

json golden() { return json::parse(testkit::read_file(testkit::data_dir() / "dataset_golden.json")); }

}  // namespace

TEST(Prng, MatchesReferenceVectors) {
  const auto g = golden();
  for (const auto& v : g["prng_vectors"]) {
    Xoshiro256 rng(std::stoull(v["seed"].get<std::string>()));
    for (const auto& out : v["outputs"]) {
      EXPECT_EQ(rng.next(), std::stoull(out.get<std::string>())) << "seed " << v["seed"];
    }
  }
}

TEST(Prng, BoundedDrawsMatchReference) {
  Xoshiro256 rng(99);
  for (const auto& b : golden()["bounded_seed99"]) {
    EXPECT_EQ(rng.bounded(std::stoull(b["n"].get<std::string>())),
              std::stoull(b["value"].get<std::string>()));
  }
}

TEST(Prng, FisherYatesIsAPermutation) {
  std::vector<int> v(1000);
  std::iota(v.begin(), v.end(), 0);
  Xoshiro256 rng(5);
  fisher_yates(std::span<int>(v), rng);
  auto sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(sorted[i], i);
  EXPECT_NE(v, sorted);
}

TEST(Prng, UniformStaysInUnitInterval) {
  Xoshiro256 rng(3);
  double sum = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 20000.0, 0.5, 0.01);
}

TEST(Prng, NormalHasUnitMoments) {
  Xoshiro256 rng(11);
  double s = 0.0, sq = 0.0;
  const int n = 50000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    s += x;
    sq += x * x;
  }
  EXPECT_NEAR(s / n, 0.0, 0.02);
  EXPECT_NEAR(sq / n, 1.0, 0.03);
}

TEST(Hash, KnownVectors) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Hash, FileMatchesBytes) {
  testkit::TempDir dir;
  testkit::write_file(dir / "f.bin", "abc");
  EXPECT_EQ(sha256_file(dir / "f.bin"), sha256_hex("abc"));
}

TEST(Text, TokensMatchGolden) {
  const auto g = json::parse(testkit::read_file(testkit::data_dir() / "tokens_golden.json"));
  ASSERT_EQ(g.size(), 20u);
  for (const auto& c : g) {
    EXPECT_EQ(text::word_tokens(c["text"].get<std::string>()),
              c["tokens"].get<std::vector<std::string>>())
        << c["text"];
  }
}

TEST(Text, IndexTokensDropSingleCharacters) {
  EXPECT_EQ(text::index_tokens("a B cd 7 ef"), (std::vector<std::string>{"cd", "ef"}));
}

TEST(Text, Utf8Validation) {
  EXPECT_TRUE(text::is_valid_utf8("plain"));
  EXPECT_TRUE(text::is_valid_utf8("na\xC3\xAFve"));
  EXPECT_FALSE(text::is_valid_utf8("\xC3"));
  EXPECT_FALSE(text::is_valid_utf8("\xC0\xAF"));
  EXPECT_FALSE(text::is_valid_utf8("\xED\xA0\x80"));
  EXPECT_FALSE(text::is_valid_utf8("\xFF"));
}

TEST(Text, WhitespaceHelpers) {
  EXPECT_EQ(text::trim("  x y \n"), "x y");
  EXPECT_EQ(text::collapse_whitespace(" a \t b\n\nc "), "a b c");
  EXPECT_EQ(text::split("a;;b", ';'), (std::vector<std::string>{"a", "", "b"}));
  EXPECT_EQ(text::join({"a", "b"}, ", "), "a, b");
  EXPECT_EQ(text::to_lower("MiXeD"), "mixed");
}

TEST(Parallel, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> seen(500);
  parallel_for(500, 4, [&](std::size_t i) { seen[i]++; });
  for (const auto& s : seen) EXPECT_EQ(s.load(), 1);
}

TEST(Parallel, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(10, 3,
                            [](std::size_t i) {
                              if (i == 7) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}
