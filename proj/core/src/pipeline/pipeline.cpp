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

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "http.hpp"
#include "json_util.hpp"
#include "tforge/error.hpp"
#include "tforge/extraction.hpp"
#include "tforge/hash.hpp"
#include "tforge/license.hpp"
#include "tforge/nerfilter.hpp"
#include "tforge/pipeline.hpp"
#include "tforge/relevance.hpp"

namespace tforge::pipeline {
namespace fs = std::filesystem;
namespace {

struct Counts {
  std::optional<std::size_t> articles_in, articles_out, triplets_in, triplets_out;
};

jsonl::json opt_json(const std::optional<std::size_t>& v) {
  return v ? jsonl::json(*v) : jsonl::json(nullptr);
}

std::optional<std::size_t> opt_from(const jsonl::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::size_t>();
}

// Relative path, size and mtime of every regular file under root.
std::string tree_fingerprint(const fs::path& root) {
  if (!fs::is_directory(root)) throw Error(ErrorCode::kIo, "corpus root is not a directory: " + root.string());
  std::vector<std::string> lines;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    std::ostringstream s;
    s << fs::relative(e.path(), root).generic_string() << '\t' << e.file_size() << '\t'
      << e.last_write_time().time_since_epoch().count();
    lines.push_back(s.str());
  }
  std::sort(lines.begin(), lines.end());
  std::string all;
  for (const auto& l : lines) all += l + '\n';
  return sha256_hex(all);
}

std::size_t distinct_docs(const std::vector<extraction::Triplet>& ts) {
  std::set<std::string_view> ids;
  for (const auto& t : ts) ids.insert(t.doc_id);
  return ids.size();
}

struct Stage {
  std::string name;
  std::vector<fs::path> inputs;
  std::vector<fs::path> outputs;
  std::function<Counts()> run;
};

class Runner {
 public:
  explicit Runner(const PipelineConfig& c) : c_(c), work_(c.work_dir) {
    fs::create_directories(work_ / "stamps");
  }

  fs::path w(const char* name) const { return work_ / name; }

  std::vector<Stage> stages() {
    return {
        {"ingest", {}, {w("documents.jsonl"), w("skipped.jsonl")}, [this] { return ingest(); }},
        {"relevance", {w("documents.jsonl")}, {w("ranked.csv"), w("relevant.jsonl")},
         [this] { return relevance(); }},
        {"license", {w("relevant.jsonl")}, {w("licensed.jsonl"), w("license_decisions.jsonl")},
         [this] { return license(); }},
        {"extract", {w("licensed.jsonl")}, {w("triplets.jsonl")}, [this] { return extract(); }},
        {"ner-filter", {w("triplets.jsonl")}, {w("scored.jsonl"), w("filtered.jsonl")},
         [this] { return ner_filter(); }},
        {"dedup", {w("filtered.jsonl")}, {w("kb.jsonl"), w("kb.csv")}, [this] { return dedup(); }},
        {"split", {w("kb.jsonl")},
         {w("train.csv"), w("test.csv"), w("validation.csv"), w("split.json")},
         [this] { return split(); }},
    };
  }

  StageRecord execute(const Stage& s) {
    const std::string config_hash = sha256_hex(stage_settings(c_, s.name));
    std::map<std::string, std::string> in_hashes;
    try {
      if (s.name == "ingest") {
        in_hashes["corpus"] = tree_fingerprint(c_.corpus_root);
      }
      for (const auto& p : s.inputs) in_hashes[p.filename().string()] = sha256_file(p);
    } catch (const Error& e) {
      throw Error(e.code(), "stage " + s.name + ": " + e.message());
    }

    const auto stamp_path = work_ / "stamps" / (s.name + ".json");
    if (auto cached = cached_record(s, stamp_path, config_hash, in_hashes)) return *cached;

    fs::remove(stamp_path);
    const auto t0 = std::chrono::steady_clock::now();
    Counts counts;
    try {
      counts = s.run();
    } catch (const Error& e) {
      throw Error(e.code(), "stage " + s.name + ": " + e.message());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    StageRecord rec{s.name, counts.articles_in, counts.articles_out, counts.triplets_in,
                    counts.triplets_out, secs, config_hash, false};
    jsonl::json outs = jsonl::json::object();
    for (const auto& p : s.outputs) outs[p.filename().string()] = sha256_file(p);
    const jsonl::json stamp = {{"stage", s.name},
                               {"config_hash", config_hash},
                               {"inputs", in_hashes},
                               {"outputs", outs},
                               {"articles_in", opt_json(rec.articles_in)},
                               {"articles_out", opt_json(rec.articles_out)},
                               {"triplets_in", opt_json(rec.triplets_in)},
                               {"triplets_out", opt_json(rec.triplets_out)},
                               {"wall_time_s", secs}};
    std::ofstream(stamp_path, std::ios::binary | std::ios::trunc) << stamp.dump(1) << '\n';
    return rec;
  }

 private:
  std::optional<StageRecord> cached_record(const Stage& s, const fs::path& stamp_path,
                                           const std::string& config_hash,
                                           const std::map<std::string, std::string>& in_hashes) {
    if (!fs::exists(stamp_path)) return std::nullopt;
    jsonl::json stamp;
    try {
      std::ifstream in(stamp_path, std::ios::binary);
      stamp = jsonl::json::parse(in);
      if (stamp.at("config_hash") != config_hash) return std::nullopt;
      if (stamp.at("inputs").get<std::map<std::string, std::string>>() != in_hashes) {
        return std::nullopt;
      }
      for (const auto& p : s.outputs) {
        if (!fs::exists(p)) return std::nullopt;
        if (stamp.at("outputs").at(p.filename().string()) != sha256_file(p)) return std::nullopt;
      }
    } catch (const std::exception&) {
      return std::nullopt;
    }
    return StageRecord{s.name,
                       opt_from(stamp, "articles_in"),
                       opt_from(stamp, "articles_out"),
                       opt_from(stamp, "triplets_in"),
                       opt_from(stamp, "triplets_out"),
                       stamp.value("wall_time_s", 0.0),
                       config_hash,
                       true};
  }

  Counts ingest() {
    corpus::LoadOptions opts;
    opts.parse.abstracts_only = c_.abstracts_only;
    opts.workers = c_.workers;
    auto loaded = corpus::load_corpus(c_.corpus_root, opts);
    corpus::write_documents(w("documents.jsonl"), loaded.documents);
    corpus::write_skip_log(w("skipped.jsonl"), loaded.skipped);
    return {loaded.stats.files, loaded.stats.yielded, std::nullopt, std::nullopt};
  }

  Counts relevance() {
    const auto docs = corpus::read_documents(w("documents.jsonl"));
    const relevance::TermQuery query(c_.terms);
    const auto vocab = relevance::build_vocabulary(docs, c_.min_df, &query);
    relevance::KnnOptions opts;
    opts.workers = c_.workers;
    opts.min_score = c_.min_score;
    const auto ranked = relevance::knn_filter(docs, query, vocab, c_.top_k, opts);
    relevance::write_ranked_csv(w("ranked.csv"), ranked);
    std::map<std::string_view, const corpus::Document*> by_id;
    for (const auto& d : docs) by_id[d.id] = &d;
    std::vector<corpus::Document> kept;
    for (const auto& r : ranked) kept.push_back(*by_id.at(r.id));
    corpus::write_documents(w("relevant.jsonl"), kept);
    return {docs.size(), kept.size(), std::nullopt, std::nullopt};
  }

  Counts license() {
    auto docs = corpus::read_documents(w("relevant.jsonl"));
    const std::size_t in = docs.size();
    license::RegistryConfig rc;
    rc.base_url = c_.registry_url;
    rc.api_key = c_.registry_api_key;
    rc.offline = c_.offline;
    rc.max_concurrency = c_.registry_concurrency;
    rc.politeness_delay = std::chrono::milliseconds(c_.politeness_ms);
    license::RegistryLicenseResolver resolver(rc, c_.license_cache);
    auto result = license::filter_by_license(std::move(docs), c_.allowed, resolver);
    corpus::write_documents(w("licensed.jsonl"), result.kept);
    jsonl::Writer log(w("license_decisions.jsonl"));
    for (const auto& d : result.decisions) {
      log.write({{"id", d.id}, {"license", std::string(corpus::license_name(d.tag))}, {"kept", d.kept}});
    }
    return {in, result.kept.size(), std::nullopt, std::nullopt};
  }

  Counts extract() {
    const auto docs = corpus::read_documents(w("licensed.jsonl"));
    std::unique_ptr<extraction::ExtractorBackend> backend;
    if (c_.backend == "remote") {
      extraction::RemoteConfig rc;
      rc.url = c_.openie_url;
      backend = std::make_unique<extraction::RemoteBackend>(rc);
    } else if (c_.backend == "replay") {
      backend = std::make_unique<extraction::ReplayBackend>(c_.replay_file);
    } else {
      backend = std::make_unique<extraction::NaiveBackend>();
    }
    extraction::ExtractOptions opts;
    opts.min_confidence = c_.min_confidence;
    opts.workers = c_.workers;
    // Partial output from an interrupted run with identical settings resumes.
    const auto marker = w("extract.partial");
    const std::string key = sha256_hex(stage_settings(c_, "extract")) + ' ' +
                            sha256_file(w("licensed.jsonl"));
    bool resume = false;
    if (fs::exists(marker)) {
      std::ifstream in(marker);
      std::string prev;
      std::getline(in, prev);
      resume = prev == key;
    }
    std::ofstream(marker, std::ios::trunc) << key << '\n';
    extraction::extract_corpus(docs, *backend, w("triplets.jsonl"), opts, resume);
    fs::remove(marker);
    const auto triplets = extraction::read_triplets(w("triplets.jsonl"));
    return {docs.size(), distinct_docs(triplets), std::nullopt, triplets.size()};
  }

  Counts ner_filter() {
    const auto triplets = extraction::read_triplets(w("triplets.jsonl"));
    std::unique_ptr<ner::EntityScorer> scorer;
    std::unique_ptr<ner::PhraseCache> cache;
    if (c_.scorer == "table") {
      scorer = std::make_unique<ner::TableScorer>(c_.ner_table);
    } else if (c_.scorer == "stub") {
      scorer = std::make_unique<ner::HashStubScorer>();
    } else {
      ner::HttpScorerConfig hc;
      hc.url = c_.ner_url;
      scorer = std::make_unique<ner::HttpEntityScorer>(hc);
      cache = std::make_unique<ner::PhraseCache>(c_.phrase_cache);
    }
    ner::ScoreOptions opts;
    opts.batch_size = c_.batch_size;
    opts.max_in_flight = c_.max_in_flight;
    const auto scored = ner::score_triplets(triplets, *scorer, opts, cache.get());
    ner::write_scored(w("scored.jsonl"), scored);
    const auto kept = ner::filter_scored(scored, c_.threshold);
    extraction::write_triplets(w("filtered.jsonl"), kept);
    return {distinct_docs(triplets), distinct_docs(kept), triplets.size(), kept.size()};
  }

  Counts dedup() {
    const auto filtered = extraction::read_triplets(w("filtered.jsonl"));
    const auto unique = ner::dedup_triplets(filtered);
    extraction::write_triplets(w("kb.jsonl"), unique);
    std::vector<dataset::Triple> rows;
    for (const auto& t : unique) rows.push_back(dataset::to_triple(t));
    dataset::write_split_csv(rows, w("kb.csv"));
    return {std::nullopt, std::nullopt, filtered.size(), unique.size()};
  }

  Counts split() {
    const auto kb = extraction::read_triplets(w("kb.jsonl"));
    std::vector<dataset::Triple> rows;
    for (const auto& t : kb) rows.push_back(dataset::to_triple(t));
    const auto parts = dataset::shuffle_and_split(rows, c_.split);
    dataset::write_split_csv(parts.train, w("train.csv"));
    dataset::write_split_csv(parts.test, w("test.csv"));
    dataset::write_split_csv(parts.validation, w("validation.csv"));
    const jsonl::json manifest = {{"seed", c_.split.seed},
                                  {"prng", "xoshiro256** seeded by splitmix64"},
                                  {"train", parts.train.size()},
                                  {"test", parts.test.size()},
                                  {"validation", parts.validation.size()},
                                  {"available", rows.size()}};
    std::ofstream(w("split.json"), std::ios::binary | std::ios::trunc) << manifest.dump(1) << '\n';
    return {std::nullopt, std::nullopt, rows.size(),
            parts.train.size() + parts.test.size() + parts.validation.size()};
  }

  const PipelineConfig& c_;
  fs::path work_;
};

std::string overall_hash(const PipelineConfig& c) {
  std::string all;
  for (const auto& s : stage_names()) all += stage_settings(c, s);
  return sha256_hex(all);
}

}  // namespace

FunnelManifest run_stages(const PipelineConfig& config, const std::string& first,
                          const std::string& last) {
  const auto& names = stage_names();
  const auto fi = std::find(names.begin(), names.end(), first);
  const auto li = std::find(names.begin(), names.end(), last);
  if (fi == names.end() || li == names.end() || fi > li) {
    throw Error(ErrorCode::kInvalidArgument, "bad stage range " + first + ".." + last);
  }
  Runner runner(config);
  FunnelManifest m;
  m.config_hash = overall_hash(config);
  m.top_k = config.top_k;
  m.min_score = config.min_score;
  m.cached = true;
  bool active = false;
  for (const auto& stage : runner.stages()) {
    if (stage.name == first) active = true;
    if (!active) continue;
    m.stages.push_back(runner.execute(stage));
    m.cached = m.cached && m.stages.back().cached;
    if (stage.name == last) break;
  }
  return m;
}

FunnelManifest run_pipeline(const PipelineConfig& config) {
  auto m = run_stages(config, stage_names().front(), stage_names().back());
  write_manifest(m, config.work_dir / "funnel_manifest.json");
  return m;
}

void write_manifest(const FunnelManifest& m, const fs::path& path) {
  jsonl::json stages = jsonl::json::array();
  for (const auto& s : m.stages) {
    stages.push_back({{"stage", s.stage},
                      {"articles_in", opt_json(s.articles_in)},
                      {"articles_out", opt_json(s.articles_out)},
                      {"triplets_in", opt_json(s.triplets_in)},
                      {"triplets_out", opt_json(s.triplets_out)},
                      {"wall_time_s", s.wall_time_s},
                      {"config_hash", s.config_hash},
                      {"cached", s.cached}});
  }
  const jsonl::json j = {{"config_hash", m.config_hash},
                         {"cached", m.cached},
                         {"relevance", {{"top_k", m.top_k},
                                        {"min_score", m.min_score ? jsonl::json(*m.min_score)
                                                                  : jsonl::json(nullptr)}}},
                         {"stages", std::move(stages)}};
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << j.dump(1) << '\n';
}

std::vector<ServiceStatus> check_services(const PipelineConfig& config) {
  std::vector<ServiceStatus> out;
  auto probe = [&](const std::string& name, const std::string& url, const std::string& path,
                   bool expect_health, bool required) {
    if (url.empty()) {
      if (required) out.push_back({name, "", false, "no URL configured"});
      return;
    }
    ServiceStatus s{name, url, false, ""};
    try {
      http::Options opts;
      opts.read_timeout = std::chrono::milliseconds(10000);
      const auto res = http::get(http::parse_url(url), path, {}, opts);
      if (!res.transport_ok) {
        s.detail = res.error;
      } else if (res.status != 200) {
        s.detail = "HTTP " + std::to_string(res.status);
      } else if (expect_health) {
        const auto j = jsonl::json::parse(res.body);
        s.ok = j.value("status", "") == "ok";
        s.detail = s.ok ? j.dump() : "status is not ok: " + res.body;
      } else {
        s.ok = true;
        s.detail = "reachable";
      }
    } catch (const std::exception& e) {
      s.detail = e.what();
    }
    out.push_back(std::move(s));
  };
  if (config.scorer == "http") probe("ner", config.ner_url, "/health", true, true);
  probe("embed", config.embed_url, "/health", true, false);
  if (config.backend == "remote") probe("openie", config.openie_url, "/", false, true);
  return out;
}

}  // namespace tforge::pipeline
