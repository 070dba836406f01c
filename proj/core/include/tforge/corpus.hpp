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
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tforge::corpus {

enum class LicenseTag { kCC0, kCC_BY, kCC_BY_NC, kOther, kUnknown };

// Canonical names: "CC0", "CC_BY", "CC_BY_NC", "OTHER", "UNKNOWN".
std::string_view license_name(LicenseTag tag);
// Inverse of license_name; also accepts lowercase. nullopt for anything else.
std::optional<LicenseTag> parse_license_name(std::string_view name);

// Maps a license designator (URL, license-type, registry field or free text)
// to a tag. Empty input is kUnknown; unrecognized non-empty input is kOther.
// BY-SA and BY-ND variants are kOther; any non-commercial variant is kCC_BY_NC.
LicenseTag classify_license(std::string_view designator);

struct Document {
  std::string id;
  std::string title;
  // Paragraphs joined by '\n'; whitespace runs inside a paragraph collapsed.
  std::string body;
  LicenseTag license = LicenseTag::kUnknown;
  std::string source_path;

  // title + '\n' + body, the text the relevance stage indexes.
  std::string indexed_text() const;

  bool operator==(const Document&) const = default;
};

enum class Format { kArticleXml, kPlainText };

struct ParseOptions {
  // Restrict the body to abstract paragraphs (XML only).
  bool abstracts_only = false;
};

// Parses one article. XML follows the JATS article layout: the accession comes
// from <article-id pub-id-type="pmc|pmcid|accession">, the title from
// <article-title>, the body from <abstract> and <body> paragraphs. Figures,
// tables, section titles and the reference list are dropped. The license
// comes from <permissions><license> (href, license-type, ali:license_ref or
// license-p text). When no accession is present, fallback_id is used.
// Throws Error(kMalformedInput) on undecodable bytes, unparseable XML or an
// article with neither title nor body.
Document parse_document(std::string_view raw, Format format, std::string_view fallback_id,
                        const ParseOptions& opts = {});

struct SkipRecord {
  std::string path;
  std::string reason;
};

struct LoadOptions {
  ParseOptions parse;
  std::size_t workers = 0;  // 0 = hardware concurrency
  // Files parsed concurrently before being emitted in order.
  std::size_t window = 256;
};

struct LoadStats {
  std::size_t files = 0;
  std::size_t yielded = 0;
  std::size_t skipped = 0;
};

// Walks root recursively and streams Documents in lexicographic path order.
// .xml and .txt files are parsed directly; members of .tar.gz / .tgz archives
// are expanded in place (path "archive.tar.gz!member"). Parsing runs in
// parallel per window; emission order does not depend on the worker count.
// Per-file failures and duplicate ids become SkipRecords; an unreadable root
// throws Error(kIo).
LoadStats for_each_document(const std::filesystem::path& root, const LoadOptions& opts,
                            const std::function<void(Document&&)>& on_document,
                            const std::function<void(SkipRecord&&)>& on_skip);

struct Corpus {
  std::vector<Document> documents;
  std::vector<SkipRecord> skipped;
  LoadStats stats;
};

Corpus load_corpus(const std::filesystem::path& root, const LoadOptions& opts = {});

// One JSON object per line: {"path":..., "reason":...}.
void write_skip_log(const std::filesystem::path& path, const std::vector<SkipRecord>& records);

// Documents as JSON lines {"id","title","body","license","source_path"}.
void write_documents(const std::filesystem::path& path, const std::vector<Document>& docs);
std::vector<Document> read_documents(const std::filesystem::path& path);

}  // namespace tforge::corpus
