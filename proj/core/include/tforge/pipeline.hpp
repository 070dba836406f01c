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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tforge/corpus.hpp"
#include "tforge/dataset.hpp"

namespace tforge::pipeline {

// Parsed pipeline.ini. Relative paths are resolved against the directory
// holding the config file.
struct PipelineConfig {
  std::filesystem::path base_dir;
  std::filesystem::path work_dir = "work";
  std::size_t workers = 0;

  // [corpus]
  std::filesystem::path corpus_root;
  bool abstracts_only = false;

  // [relevance]
  std::vector<std::string> terms;
  std::size_t top_k = 40000;
  std::optional<double> min_score;
  std::size_t min_df = 1;

  // [license]
  std::set<corpus::LicenseTag> allowed = {corpus::LicenseTag::kCC0};
  std::filesystem::path license_cache;
  std::string registry_url;
  std::string registry_api_key;
  bool offline = false;
  std::size_t registry_concurrency = 4;
  std::int64_t politeness_ms = 350;

  // [extract]
  std::string backend = "naive";  // naive | remote | replay
  std::string openie_url;
  std::filesystem::path replay_file;
  double min_confidence = 0.0;

  // [ner]
  std::string scorer = "http";  // http | stub | table
  std::string ner_url;
  std::filesystem::path ner_table;
  std::filesystem::path phrase_cache;
  double threshold = 0.8;
  std::size_t batch_size = 32;
  std::size_t max_in_flight = 2;

  // [split]
  dataset::SplitSpec split;

  // [services]
  std::string embed_url;
};

// Throws Error(kConfig) on unknown sections or keys and invalid values.
// When apply_env is set, TF_NER_URL, TF_EMBED_URL and TF_OPENIE_URL
// override the corresponding URLs.
PipelineConfig load_config(const std::filesystem::path& ini, bool apply_env = true);

// Canonical "section.key=value" lines for the settings a stage depends on.
std::string stage_settings(const PipelineConfig& config, const std::string& stage);

inline const std::vector<std::string>& stage_names() {
  static const std::vector<std::string> kStages = {"ingest",     "relevance", "license", "extract",
                                                   "ner-filter", "dedup",     "split"};
  return kStages;
}

struct StageRecord {
  std::string stage;
  std::optional<std::size_t> articles_in;
  std::optional<std::size_t> articles_out;
  std::optional<std::size_t> triplets_in;
  std::optional<std::size_t> triplets_out;
  double wall_time_s = 0.0;
  std::string config_hash;
  bool cached = false;
};

struct FunnelManifest {
  std::vector<StageRecord> stages;
  std::string config_hash;
  bool cached = false;  // every stage was skipped
  std::size_t top_k = 0;
  std::optional<double> min_score;
};

// Runs the stages in order, skipping a stage when its stamp records the same
// settings hash and input/output artifact hashes. Writes
// <work_dir>/funnel_manifest.json. A failing stage is rethrown as an Error
// naming the stage; artifacts of earlier stages are kept.
FunnelManifest run_pipeline(const PipelineConfig& config);

// Runs stages [first, last] only (by name), with the same stamping.
FunnelManifest run_stages(const PipelineConfig& config, const std::string& first,
                          const std::string& last);

void write_manifest(const FunnelManifest& manifest, const std::filesystem::path& path);

struct ServiceStatus {
  std::string name;
  std::string url;
  bool ok = false;
  std::string detail;
};

// Probes the configured HTTP services (/health for the model service, the
// root path for the OpenIE server). Unconfigured services are omitted.
std::vector<ServiceStatus> check_services(const PipelineConfig& config);

}  // namespace tforge::pipeline
