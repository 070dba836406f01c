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
#include <stdexcept>

#include "tforge/corpus.hpp"
#include "tforge/error.hpp"
#include "tforge/extraction.hpp"
#include "test_support.hpp"

using namespace tforge;
using namespace tforge::extraction;
using nlohmann::json;
using std::chrono::milliseconds;

namespace {

std::vector<std::string> gold_sentences() {
  std::vector<std::string> out;
  std::istringstream in(testkit::read_file(testkit::data_dir() / "sentences_gold.txt"));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

// End offsets of each sentence inside the space-joined paragraph.
std::set<std::size_t> boundaries(const std::vector<std::string>& sentences,
                                 const std::string& paragraph) {
  std::set<std::size_t> ends;
  std::size_t pos = 0;
  for (const auto& s : sentences) {
    const auto at = paragraph.find(s, pos);
    if (at == std::string::npos) continue;
    pos = at + s.size();
    ends.insert(pos);
  }
  return ends;
}

json recorded() {
  return json::parse(testkit::read_file(testkit::data_dir() / "openie/recorded.json"));
}

RemoteConfig fast_remote(const std::string& url) {
  RemoteConfig c;
  c.url = url;
  c.initial_backoff = milliseconds(1);
  c.timeout = milliseconds(5000);
  return c;
}

void serve_openie(testkit::StubServer& stub, const json& rec) {
  stub.server().Post("/", [&stub, rec](const httplib::Request& req, httplib::Response& res) {
    ++stub.hits();
    const auto props = json::parse(req.get_param_value("properties"));
    if (props.value("annotators", "").find("openie") == std::string::npos) {
      res.status = 400;
      return;
    }
    for (const auto& r : rec) {
      if (r["sentence"] == req.body) {
        res.set_content(r["response"].dump(), "application/json");
        return;
      }
    }
    res.status = 400;
    res.set_content("unknown sentence", "text/plain");
  });
}

std::vector<Triplet> triplets_of(const std::vector<std::vector<RawTriple>>& per_sentence) {
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < per_sentence.size(); ++i) {
    for (const auto& r : per_sentence[i]) {
      out.push_back({r.subject, r.relation, r.object, r.confidence, "fixture", i});
    }
  }
  return out;
}

}  // namespace

TEST(Sentences, GoldParagraphF1AtLeast96) {
  const auto gold = gold_sentences();
  ASSERT_EQ(gold.size(), 50u);
  std::string paragraph;
  for (const auto& s : gold) paragraph += (paragraph.empty() ? "" : " ") + s;
  const auto predicted = split_sentences(paragraph);
  const auto g = boundaries(gold, paragraph);
  const auto p = boundaries(predicted, paragraph);
  std::size_t hit = 0;
  for (auto b : p) hit += g.count(b);
  const double precision = p.empty() ? 0.0 : static_cast<double>(hit) / p.size();
  const double recall = static_cast<double>(hit) / g.size();
  const double f1 = precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0;
  EXPECT_GE(f1, 0.96) << "precision " << precision << " recall " << recall;
}

TEST(Sentences, AbbreviationsAndDecimals) {
  EXPECT_EQ(split_sentences("Smith et al. found 3.5 mg. Next one."),
            (std::vector<std::string>{"Smith et al. found 3.5 mg.", "Next one."}));
  EXPECT_EQ(split_sentences("See Fig. 2 now. (Done.)"),
            (std::vector<std::string>{"See Fig. 2 now.", "(Done.)"}));
  EXPECT_TRUE(split_sentences("   ").empty());
}

TEST(Sentences, DocumentLinesSplitIndependently) {
  corpus::Document d{"D", "Title words", "First line\nSecond line. Third.", {}, ""};
  EXPECT_EQ(document_sentences(d),
            (std::vector<std::string>{"First line", "Second line.", "Third."}));
}

TEST(Naive, SimpleSubjectVerbObject) {
  EXPECT_EQ(naive_extract("Gefitinib inhibits EGFR."),
            (std::vector<RawTriple>{{"Gefitinib", "inhibits", "EGFR", 1.0}}));
  EXPECT_EQ(naive_extract("Cisplatin causes nephrotoxicity."),
            (std::vector<RawTriple>{{"Cisplatin", "causes", "nephrotoxicity", 1.0}}));
}

TEST(Naive, ClauseSplitYieldsTwoTriplets) {
  EXPECT_EQ(naive_extract("X inhibits Y, and Z activates W."),
            (std::vector<RawTriple>{{"X", "inhibits", "Y", 1.0}, {"Z", "activates", "W", 1.0}}));
}

TEST(Naive, AuxiliariesAndPrepositions) {
  const auto t = naive_extract("Pemetrexed is used in adenocarcinoma.");
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].relation, "is used in");
  EXPECT_EQ(t[0].object, "adenocarcinoma");
}

TEST(Naive, NoVerbNoTriplet) {
  EXPECT_TRUE(naive_extract("Lung adenocarcinoma in never smokers.").empty());
  EXPECT_TRUE(naive_extract("").empty());
}

TEST(OpenieParse, ShapesAndErrors) {
  const auto t = parse_openie_response(
      R"({"sentences":[{"openie":[{"subject":"a","relation":"b","object":"c"}]}]})");
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].confidence, 1.0);
  EXPECT_TRUE(parse_openie_response(R"({"sentences":[]})").empty());
  EXPECT_THROW(parse_openie_response("not json"), Error);
}

TEST(Remote, TwentySentencesRecordAndReplayByteForByte) {
  const auto rec = recorded();
  ASSERT_EQ(rec.size(), 20u);
  testkit::StubServer stub;
  serve_openie(stub, rec);
  stub.start();
  testkit::TempDir dir;

  RemoteBackend remote(fast_remote(stub.url()));
  RecordingBackend recorder(remote, dir / "rec.jsonl");
  std::vector<std::vector<RawTriple>> live, expected;
  for (const auto& r : rec) {
    live.push_back(recorder.extract(r["sentence"].get<std::string>()));
    std::vector<RawTriple> e;
    for (const auto& t : r["triples"]) {
      e.push_back({t["subject"], t["relation"], t["object"], t["confidence"]});
    }
    expected.push_back(std::move(e));
  }
  EXPECT_EQ(live, expected);
  EXPECT_EQ(stub.hits().load(), 20);
  stub.stop();

  ReplayBackend replay(dir / "rec.jsonl");
  EXPECT_EQ(replay.size(), 20u);
  std::vector<std::vector<RawTriple>> replayed;
  for (const auto& r : rec) replayed.push_back(replay.extract(r["sentence"].get<std::string>()));
  write_triplets(dir / "expected.jsonl", triplets_of(expected));
  write_triplets(dir / "replayed.jsonl", triplets_of(replayed));
  EXPECT_EQ(testkit::read_file(dir / "replayed.jsonl"), testkit::read_file(dir / "expected.jsonl"));
  EXPECT_THROW(replay.extract("Never recorded."), Error);
}

TEST(Remote, ClientErrorIsBackendErrorAndSkipped) {
  testkit::StubServer stub;
  serve_openie(stub, recorded());
  stub.start();
  RemoteBackend remote(fast_remote(stub.url()));
  try {
    remote.extract("Unknown sentence here.");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBackendError);
  }
  EXPECT_EQ(stub.hits().load(), 1);
  corpus::Document d{"D", "", "Gefitinib inhibits EGFR. Unknown sentence here.", {}, ""};
  ExtractStats stats;
  const auto t = extract_triplets(d, remote, {}, &stats);
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(stats.failed_sentences, 1u);
}

TEST(Remote, ServiceUnavailableRetriesThenRaises) {
  testkit::StubServer stub;
  stub.server().Post("/", [&stub](const httplib::Request&, httplib::Response& res) {
    ++stub.hits();
    res.status = 503;
  });
  stub.start();
  RemoteBackend remote(fast_remote(stub.url()));
  try {
    remote.extract("Gefitinib inhibits EGFR.");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBackendUnavailable);
  }
  EXPECT_EQ(stub.hits().load(), 3);
  corpus::Document d{"D", "", "Gefitinib inhibits EGFR.", {}, ""};
  EXPECT_THROW(extract_triplets(d, remote), Error);
}

TEST(Remote, UnreachableServerIsUnavailable) {
  RemoteBackend remote(fast_remote("http://127.0.0.1:1"));
  try {
    remote.extract("x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBackendUnavailable);
  }
}

TEST(Extract, ConfidenceFilteringAndPositions) {
  const auto rec = recorded();
  testkit::TempDir dir;
  {
    std::ofstream out(dir / "rec.jsonl");
    for (const auto& r : rec) out << json{{"sentence", r["sentence"]}, {"triples", r["triples"]}}.dump() << '\n';
  }
  ReplayBackend replay(dir / "rec.jsonl");
  corpus::Document d{"PMC1", "", "Crizotinib blocks ALK signaling.\nGefitinib inhibits EGFR.", {}, ""};
  ExtractOptions opts;
  opts.min_confidence = 0.7;
  ExtractStats stats;
  const auto t = extract_triplets(d, replay, opts, &stats);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].sentence_index, 0u);
  EXPECT_EQ(t[1].sentence_index, 1u);
  EXPECT_EQ(t[1].doc_id, "PMC1");
  EXPECT_EQ(stats.below_min_confidence, 1u);
}

namespace {

// Fails with a non-recoverable error once the budget of documents is spent.
class InterruptingBackend final : public ExtractorBackend {
 public:
  explicit InterruptingBackend(std::string poison) : poison_(std::move(poison)) {}
  std::vector<RawTriple> extract(std::string_view sentence) override {
    if (sentence.find(poison_) != std::string_view::npos) throw std::runtime_error("interrupted");
    return naive_extract(sentence);
  }
  std::string name() const override { return "interrupting"; }

 private:
  std::string poison_;
};

}  // namespace

TEST(Extract, ResumeAfterInterruptionMatchesCleanRun) {
  std::vector<corpus::Document> docs;
  for (int i = 0; i < 30; ++i) {
    docs.push_back({"D" + std::to_string(100 + i), "",
                    "Drug" + std::to_string(i) + " inhibits Target" + std::to_string(i) +
                        ". Marker" + std::to_string(i) + " predicts response.",
                    {}, ""});
  }
  testkit::TempDir dir;
  NaiveBackend naive;
  ExtractOptions opts;
  opts.workers = 2;
  extract_corpus(docs, naive, dir / "clean.jsonl", opts, false);

  InterruptingBackend broken("Drug17 ");
  EXPECT_THROW(extract_corpus(docs, broken, dir / "run.jsonl", opts, false), std::runtime_error);
  const auto stats = extract_corpus(docs, naive, dir / "run.jsonl", opts, true);
  EXPECT_GT(stats.resumed_documents, 0u);
  EXPECT_EQ(stats.resumed_documents + stats.documents, 30u);
  EXPECT_EQ(testkit::read_file(dir / "run.jsonl"), testkit::read_file(dir / "clean.jsonl"));
  EXPECT_EQ(read_triplets(dir / "clean.jsonl").size(), 60u);
}

TEST(Extract, TripletJsonRoundTrip) {
  testkit::TempDir dir;
  const std::vector<Triplet> t = {{"a \"q\"", "b", "c", 0.25, "D", 3}, {"x", "y", "z", 1.0, "E", 0}};
  write_triplets(dir / "t.jsonl", t);
  EXPECT_EQ(read_triplets(dir / "t.jsonl"), t);
}
