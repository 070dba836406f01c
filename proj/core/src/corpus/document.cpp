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

#include <array>

#include "corpus/internal.hpp"
#include "json_util.hpp"
#include "tforge/corpus.hpp"
#include "tforge/error.hpp"
#include "tforge/text.hpp"

namespace tforge::corpus {
namespace {

constexpr std::array<std::string_view, 5> kLicenseNames = {"CC0", "CC_BY", "CC_BY_NC", "OTHER",
                                                           "UNKNOWN"};

bool contains(std::string_view hay, std::string_view needle) {
  return hay.find(needle) != std::string_view::npos;
}

Document parse_plain_text(std::string_view raw, std::string_view fallback_id) {
  std::vector<std::string> paragraphs;
  std::string current;
  std::size_t pos = 0;
  auto flush = [&] {
    auto p = text::collapse_whitespace(current);
    if (!p.empty()) paragraphs.push_back(std::move(p));
    current.clear();
  };
  while (pos <= raw.size()) {
    const auto eol = raw.find('\n', pos);
    const auto line = raw.substr(pos, eol == std::string_view::npos ? raw.npos : eol - pos);
    if (text::trim(line).empty()) {
      flush();
    } else {
      current.append(line);
      current.push_back(' ');
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  flush();
  if (paragraphs.empty()) throw Error(ErrorCode::kMalformedInput, "empty document");
  Document doc;
  doc.id = std::string(fallback_id);
  doc.body = text::join(paragraphs, "\n");
  return doc;
}

}  // namespace

std::string_view license_name(LicenseTag tag) { return kLicenseNames[static_cast<int>(tag)]; }

std::optional<LicenseTag> parse_license_name(std::string_view name) {
  const auto upper = [&] {
    std::string s(name);
    for (auto& c : s) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    return s;
  }();
  for (std::size_t i = 0; i < kLicenseNames.size(); ++i) {
    if (upper == kLicenseNames[i]) return static_cast<LicenseTag>(i);
  }
  return std::nullopt;
}

LicenseTag classify_license(std::string_view designator) {
  const auto trimmed = text::trim(designator);
  if (trimmed.empty()) return LicenseTag::kUnknown;
  if (auto exact = parse_license_name(trimmed)) return *exact;
  // Normalize separators so "CC BY-NC", "cc_by_nc" and ".../by-nc/4.0" agree.
  std::string s = text::to_lower(trimmed);
  for (auto& c : s) {
    if (c == '_' || c == ' ') c = '-';
  }
  if (contains(s, "cc0") || contains(s, "publicdomain/zero") || contains(s, "cc-zero")) {
    return LicenseTag::kCC0;
  }
  if (contains(s, "by-nc") || contains(s, "noncommercial") || contains(s, "non-commercial")) {
    return LicenseTag::kCC_BY_NC;
  }
  if (contains(s, "by-sa") || contains(s, "by-nd")) return LicenseTag::kOther;
  if (contains(s, "licenses/by/") || contains(s, "cc-by") || s == "by") return LicenseTag::kCC_BY;
  return LicenseTag::kOther;
}

std::string Document::indexed_text() const { return title + "\n" + body; }

Document parse_document(std::string_view raw, Format format, std::string_view fallback_id,
                        const ParseOptions& opts) {
  if (raw.size() >= 3 && raw.substr(0, 3) == "\xEF\xBB\xBF") raw.remove_prefix(3);
  if (!text::is_valid_utf8(raw)) throw Error(ErrorCode::kMalformedInput, "invalid UTF-8");
  Document doc = format == Format::kArticleXml ? internal::parse_jats(raw, fallback_id, opts)
                                               : parse_plain_text(raw, fallback_id);
  if (doc.id.empty()) throw Error(ErrorCode::kMalformedInput, "empty article id");
  return doc;
}

void write_skip_log(const std::filesystem::path& path, const std::vector<SkipRecord>& records) {
  jsonl::Writer out(path);
  for (const auto& r : records) out.write({{"path", r.path}, {"reason", r.reason}});
}

void write_documents(const std::filesystem::path& path, const std::vector<Document>& docs) {
  jsonl::Writer out(path);
  for (const auto& d : docs) {
    out.write({{"id", d.id},
               {"title", d.title},
               {"body", d.body},
               {"license", std::string(license_name(d.license))},
               {"source_path", d.source_path}});
  }
}

std::vector<Document> read_documents(const std::filesystem::path& path) {
  std::vector<Document> docs;
  jsonl::for_each(path, [&](const jsonl::json& j) {
    Document d;
    try {
      d.id = j.at("id").get<std::string>();
      d.title = j.value("title", "");
      d.body = j.value("body", "");
      d.license = parse_license_name(j.value("license", "UNKNOWN")).value_or(LicenseTag::kUnknown);
      d.source_path = j.value("source_path", "");
    } catch (const jsonl::json::exception& e) {
      throw Error(ErrorCode::kMalformedInput, path.string() + ": " + e.what());
    }
    docs.push_back(std::move(d));
  });
  return docs;
}

}  // namespace tforge::corpus
