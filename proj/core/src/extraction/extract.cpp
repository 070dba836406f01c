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
#include <fstream>
#include <set>

#include "json_util.hpp"
#include "tforge/error.hpp"
#include "tforge/extraction.hpp"
#include "tforge/parallel.hpp"
#include "tforge/text.hpp"

namespace tforge::extraction {
namespace {

jsonl::json to_json(const Triplet& t) {
  return {{"doc_id", t.doc_id},       {"sentence_index", t.sentence_index},
          {"subject", t.subject},     {"relation", t.relation},
          {"object", t.object},       {"confidence", t.confidence}};
}

Triplet from_json(const jsonl::json& j) {
  Triplet t;
  t.doc_id = j.at("doc_id").get<std::string>();
  t.sentence_index = j.at("sentence_index").get<std::size_t>();
  t.subject = j.at("subject").get<std::string>();
  t.relation = j.at("relation").get<std::string>();
  t.object = j.at("object").get<std::string>();
  t.confidence = j.value("confidence", 1.0);
  return t;
}

struct Progress {
  std::set<std::string> done;
  std::uintmax_t offset = 0;
};

Progress read_progress(const std::filesystem::path& path) {
  Progress p;
  if (!std::filesystem::exists(path)) return p;
  try {
    jsonl::for_each(path, [&](const jsonl::json& j) {
      p.done.insert(j.at("doc_id").get<std::string>());
      p.offset = j.at("offset").get<std::uintmax_t>();
    });
  } catch (const Error&) {
    // A torn last line is expected after a crash; keep what parsed.
  }
  return p;
}

}  // namespace

std::vector<Triplet> extract_triplets(const corpus::Document& doc, ExtractorBackend& backend,
                                      const ExtractOptions& opts, ExtractStats* stats) {
  ExtractStats local;
  std::vector<Triplet> out;
  const auto sentences = document_sentences(doc);
  local.documents = 1;
  local.sentences = sentences.size();
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    std::vector<RawTriple> raw;
    try {
      raw = backend.extract(sentences[i]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBackendError) throw;
      ++local.failed_sentences;
      continue;
    }
    for (auto& r : raw) {
      Triplet t{std::string(text::trim(r.subject)), std::string(text::trim(r.relation)),
                std::string(text::trim(r.object)), r.confidence, doc.id, i};
      if (t.subject.empty() || t.relation.empty() || t.object.empty()) continue;
      if (!(t.confidence >= 0.0 && t.confidence <= 1.0)) continue;
      if (t.confidence < opts.min_confidence) {
        ++local.below_min_confidence;
        continue;
      }
      out.push_back(std::move(t));
    }
  }
  local.triplets = out.size();
  if (stats) {
    stats->documents += local.documents;
    stats->sentences += local.sentences;
    stats->triplets += local.triplets;
    stats->failed_sentences += local.failed_sentences;
    stats->below_min_confidence += local.below_min_confidence;
  }
  return out;
}

ExtractStats extract_corpus(std::span<const corpus::Document> docs, ExtractorBackend& backend,
                            const std::filesystem::path& out_jsonl, const ExtractOptions& opts,
                            bool resume) {
  std::vector<const corpus::Document*> order;
  order.reserve(docs.size());
  for (const auto& d : docs) order.push_back(&d);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return a->id < b->id; });

  auto progress_path = out_jsonl;
  progress_path += ".progress";
  ExtractStats stats;
  Progress progress;
  if (resume && std::filesystem::exists(out_jsonl)) {
    progress = read_progress(progress_path);
    std::filesystem::resize_file(out_jsonl, progress.offset);
  } else {
    std::ofstream(out_jsonl, std::ios::trunc);
    std::ofstream(progress_path, std::ios::trunc);
  }

  std::vector<const corpus::Document*> todo;
  for (const auto* d : order) {
    if (progress.done.contains(d->id)) {
      ++stats.resumed_documents;
    } else {
      todo.push_back(d);
    }
  }

  const std::size_t workers = opts.workers ? opts.workers : default_workers();
  const std::size_t window = std::max<std::size_t>(1, workers * 4);
  std::ofstream out(out_jsonl, std::ios::binary | std::ios::app);
  jsonl::Writer progress_out(progress_path, true);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + out_jsonl.string());
  std::uintmax_t offset = progress.offset;

  for (std::size_t base = 0; base < todo.size(); base += window) {
    const std::size_t n = std::min(window, todo.size() - base);
    std::vector<std::vector<Triplet>> results(n);
    std::vector<ExtractStats> part(n);
    parallel_for(n, workers, [&](std::size_t k) {
      results[k] = extract_triplets(*todo[base + k], backend, opts, &part[k]);
    });
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& t : results[k]) {
        const auto line = jsonl::dump_line(to_json(t));
        out << line;
        offset += line.size();
      }
      out.flush();
      if (!out) throw Error(ErrorCode::kIo, "write failed: " + out_jsonl.string());
      progress_out.write({{"doc_id", todo[base + k]->id}, {"offset", offset}});
      progress_out.flush();
      stats.documents += part[k].documents;
      stats.sentences += part[k].sentences;
      stats.triplets += part[k].triplets;
      stats.failed_sentences += part[k].failed_sentences;
      stats.below_min_confidence += part[k].below_min_confidence;
    }
  }
  return stats;
}

void write_triplets(const std::filesystem::path& path, std::span<const Triplet> triplets) {
  jsonl::Writer out(path);
  for (const auto& t : triplets) out.write(to_json(t));
}

std::vector<Triplet> read_triplets(const std::filesystem::path& path) {
  std::vector<Triplet> out;
  jsonl::for_each(path, [&](const jsonl::json& j) {
    try {
      out.push_back(from_json(j));
    } catch (const jsonl::json::exception& e) {
      throw Error(ErrorCode::kMalformedInput, path.string() + ": " + e.what());
    }
  });
  return out;
}

}  // namespace tforge::extraction
