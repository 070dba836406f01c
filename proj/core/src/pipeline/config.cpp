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

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "tforge/error.hpp"
#include "tforge/pipeline.hpp"
#include "tforge/text.hpp"

namespace tforge::pipeline {
namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> kSchema = {
      {"run", {"work_dir", "workers"}},
      {"corpus", {"root", "abstracts_only"}},
      {"relevance", {"terms", "top_k", "min_score", "min_df"}},
      {"license",
       {"allowed", "cache", "registry_url", "api_key", "offline", "concurrency", "politeness_ms"}},
      {"extract", {"backend", "openie_url", "replay", "min_confidence"}},
      {"ner",
       {"scorer", "url", "table", "cache", "threshold", "batch_size", "max_in_flight"}},
      {"split", {"train", "test", "validation", "seed"}},
      {"services", {"embed_url"}},
  };
  return kSchema;
}

[[noreturn]] void bad(const std::string& key, const std::string& why) {
  throw Error(ErrorCode::kConfig, key + ": " + why);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream ss(value);
  T out{};
  ss >> out;
  if (ss.fail() || !ss.eof()) bad(key, "not a number: '" + value + "'");
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  const auto v = text::to_lower(value);
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  bad(key, "not a boolean: '" + value + "'");
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& value) {
  if (value.empty()) return {};
  std::filesystem::path p(value);
  return p.is_absolute() ? p : (base / p).lexically_normal();
}

std::vector<std::string> split_list(const std::string& value, char sep) {
  std::vector<std::string> out;
  for (const auto& part : text::split(value, sep)) {
    const auto t = text::trim(part);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

std::string fmt_double(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

}  // namespace

PipelineConfig load_config(const std::filesystem::path& ini, bool apply_env) {
  pt::ptree tree;
  try {
    pt::read_ini(ini.string(), tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorCode::kConfig, e.what());
  }
  PipelineConfig c;
  c.base_dir = std::filesystem::absolute(ini).parent_path();
  c.work_dir = c.base_dir / "work";

  for (const auto& [section, entries] : tree) {
    if (entries.empty() && !entries.data().empty()) bad(section, "key outside any section");
    const auto it = schema().find(section);
    if (it == schema().end()) bad(section, "unknown section");
    for (const auto& [key, node] : entries) {
      const std::string name = section + "." + key;
      if (!it->second.contains(key)) bad(name, "unknown key");
      const std::string v(text::trim(node.data()));
      if (name == "run.work_dir") c.work_dir = resolve(c.base_dir, v);
      else if (name == "run.workers") c.workers = parse_number<std::size_t>(name, v);
      else if (name == "corpus.root") c.corpus_root = resolve(c.base_dir, v);
      else if (name == "corpus.abstracts_only") c.abstracts_only = parse_bool(name, v);
      else if (name == "relevance.terms") c.terms = split_list(v, ';');
      else if (name == "relevance.top_k") c.top_k = parse_number<std::size_t>(name, v);
      else if (name == "relevance.min_score") {
        if (!v.empty()) c.min_score = parse_number<double>(name, v);
      } else if (name == "relevance.min_df") c.min_df = parse_number<std::size_t>(name, v);
      else if (name == "license.allowed") {
        c.allowed.clear();
        for (const auto& tag : split_list(v, ',')) {
          const auto parsed = corpus::parse_license_name(tag);
          if (!parsed) bad(name, "unknown license '" + tag + "'");
          c.allowed.insert(*parsed);
        }
      } else if (name == "license.cache") c.license_cache = resolve(c.base_dir, v);
      else if (name == "license.registry_url") c.registry_url = v;
      else if (name == "license.api_key") c.registry_api_key = v;
      else if (name == "license.offline") c.offline = parse_bool(name, v);
      else if (name == "license.concurrency") c.registry_concurrency = parse_number<std::size_t>(name, v);
      else if (name == "license.politeness_ms") c.politeness_ms = parse_number<std::int64_t>(name, v);
      else if (name == "extract.backend") c.backend = v;
      else if (name == "extract.openie_url") c.openie_url = v;
      else if (name == "extract.replay") c.replay_file = resolve(c.base_dir, v);
      else if (name == "extract.min_confidence") c.min_confidence = parse_number<double>(name, v);
      else if (name == "ner.scorer") c.scorer = v;
      else if (name == "ner.url") c.ner_url = v;
      else if (name == "ner.table") c.ner_table = resolve(c.base_dir, v);
      else if (name == "ner.cache") c.phrase_cache = resolve(c.base_dir, v);
      else if (name == "ner.threshold") c.threshold = parse_number<double>(name, v);
      else if (name == "ner.batch_size") c.batch_size = parse_number<std::size_t>(name, v);
      else if (name == "ner.max_in_flight") c.max_in_flight = parse_number<std::size_t>(name, v);
      else if (name == "split.train") c.split.train = parse_number<std::size_t>(name, v);
      else if (name == "split.test") c.split.test = parse_number<std::size_t>(name, v);
      else if (name == "split.validation") c.split.validation = parse_number<std::size_t>(name, v);
      else if (name == "split.seed") c.split.seed = parse_number<std::uint64_t>(name, v);
      else if (name == "services.embed_url") c.embed_url = v;
    }
  }

  if (apply_env) {
    if (const char* v = std::getenv("TF_NER_URL"); v && *v) c.ner_url = v;
    if (const char* v = std::getenv("TF_EMBED_URL"); v && *v) c.embed_url = v;
    if (const char* v = std::getenv("TF_OPENIE_URL"); v && *v) c.openie_url = v;
  }

  if (c.corpus_root.empty()) bad("corpus.root", "required");
  if (c.terms.empty()) bad("relevance.terms", "required");
  if (c.top_k == 0) bad("relevance.top_k", "must be >= 1");
  if (c.allowed.empty()) bad("license.allowed", "must name at least one license");
  if (c.backend != "naive" && c.backend != "remote" && c.backend != "replay") {
    bad("extract.backend", "expected naive, remote or replay");
  }
  if (c.backend == "replay" && c.replay_file.empty()) bad("extract.replay", "required for replay");
  if (c.scorer != "http" && c.scorer != "stub" && c.scorer != "table") {
    bad("ner.scorer", "expected http, stub or table");
  }
  if (c.scorer == "table" && c.ner_table.empty()) bad("ner.table", "required for table scorer");
  if (!(c.threshold >= 0.0 && c.threshold <= 1.0)) bad("ner.threshold", "must lie in [0,1]");
  if (c.batch_size == 0) bad("ner.batch_size", "must be >= 1");
  if (c.max_in_flight == 0) bad("ner.max_in_flight", "must be >= 1");
  if (!(c.min_confidence >= 0.0 && c.min_confidence <= 1.0)) {
    bad("extract.min_confidence", "must lie in [0,1]");
  }
  if (c.license_cache.empty()) c.license_cache = c.work_dir / "license_cache.jsonl";
  if (c.phrase_cache.empty()) c.phrase_cache = c.work_dir / "ner_cache.jsonl";
  return c;
}

std::string stage_settings(const PipelineConfig& c, const std::string& stage) {
  std::ostringstream s;
  s << "stage=" << stage << '\n';
  if (stage == "ingest") {
    s << "corpus.root=" << c.corpus_root.generic_string() << '\n'
      << "corpus.abstracts_only=" << c.abstracts_only << '\n';
  } else if (stage == "relevance") {
    s << "relevance.terms=" << text::join(c.terms, ";") << '\n'
      << "relevance.top_k=" << c.top_k << '\n'
      << "relevance.min_score=" << (c.min_score ? fmt_double(*c.min_score) : "none") << '\n'
      << "relevance.min_df=" << c.min_df << '\n';
  } else if (stage == "license") {
    s << "license.allowed=";
    for (auto tag : c.allowed) s << corpus::license_name(tag) << ',';
    s << "\nlicense.registry_url=" << c.registry_url << '\n';
  } else if (stage == "extract") {
    s << "extract.backend=" << c.backend << '\n'
      << "extract.openie_url=" << (c.backend == "remote" ? c.openie_url : "") << '\n'
      << "extract.replay=" << c.replay_file.generic_string() << '\n'
      << "extract.min_confidence=" << fmt_double(c.min_confidence) << '\n';
  } else if (stage == "ner-filter") {
    s << "ner.scorer=" << c.scorer << '\n'
      << "ner.url=" << (c.scorer == "http" ? c.ner_url : "") << '\n'
      << "ner.table=" << c.ner_table.generic_string() << '\n'
      << "ner.threshold=" << fmt_double(c.threshold) << '\n';
  } else if (stage == "split") {
    s << "split.train=" << c.split.train << '\n'
      << "split.test=" << c.split.test << '\n'
      << "split.validation=" << c.split.validation << '\n'
      << "split.seed=" << c.split.seed << '\n';
  }
  return s.str();
}

}  // namespace tforge::pipeline
