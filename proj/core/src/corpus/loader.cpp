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
#include <sstream>
#include <unordered_set>

#include "corpus/internal.hpp"
#include "tforge/corpus.hpp"
#include "tforge/error.hpp"
#include "tforge/parallel.hpp"

namespace tforge::corpus {
namespace {

namespace fs = std::filesystem;

enum class Kind { kXml, kText, kArchive, kUnsupported };

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

Kind classify(std::string_view name) {
  if (ends_with(name, ".tar.gz") || ends_with(name, ".tgz")) return Kind::kArchive;
  if (ends_with(name, ".xml") || ends_with(name, ".nxml")) return Kind::kXml;
  if (ends_with(name, ".txt")) return Kind::kText;
  return Kind::kUnsupported;
}

std::string stem_of(std::string_view name) {
  auto slash = name.find_last_of('/');
  auto base = slash == std::string_view::npos ? name : name.substr(slash + 1);
  auto dot = base.find('.');
  return std::string(dot == std::string_view::npos ? base : base.substr(0, dot));
}

// One input the loader has to account for: a file on disk or an archive
// member whose bytes are already in memory.
struct Unit {
  std::string path;
  Kind kind = Kind::kUnsupported;
  std::string stem;
  std::optional<std::string> bytes;
  std::string preset_error;
};

struct Outcome {
  std::optional<Document> doc;
  std::string error;
};

Outcome parse_unit(Unit& unit, const ParseOptions& opts) {
  if (!unit.preset_error.empty()) return {std::nullopt, unit.preset_error};
  if (unit.kind == Kind::kUnsupported) return {std::nullopt, "unsupported file type"};
  try {
    if (!unit.bytes) {
      std::ifstream in(unit.path, std::ios::binary);
      if (!in) return {std::nullopt, "unreadable file"};
      std::ostringstream ss;
      ss << in.rdbuf();
      unit.bytes = std::move(ss).str();
    }
    auto doc = parse_document(*unit.bytes,
                              unit.kind == Kind::kXml ? Format::kArticleXml : Format::kPlainText,
                              unit.stem, opts);
    doc.source_path = unit.path;
    unit.bytes.reset();
    return {std::move(doc), {}};
  } catch (const Error& e) {
    return {std::nullopt, e.what()};
  }
}

std::vector<Unit> expand_archive(const std::string& path) {
  std::vector<Unit> units;
  std::vector<internal::TarMember> members;
  try {
    members = internal::read_tar_gz(path);
  } catch (const Error& e) {
    Unit u;
    u.path = path;
    u.preset_error = e.what();
    units.push_back(std::move(u));
    return units;
  }
  std::sort(members.begin(), members.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  for (auto& m : members) {
    Unit u;
    u.path = path + "!" + m.name;
    u.kind = classify(m.name);
    u.stem = stem_of(m.name);
    u.bytes = std::move(m.data);
    units.push_back(std::move(u));
  }
  return units;
}

}  // namespace

LoadStats for_each_document(const fs::path& root, const LoadOptions& opts,
                            const std::function<void(Document&&)>& on_document,
                            const std::function<void(SkipRecord&&)>& on_skip) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorCode::kIo, "corpus root is not a readable directory: " + root.string());
  }
  std::vector<std::string> files;
  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot list " + root.string() + ": " + ec.message());
  for (const auto& entry : it) {
    if (entry.is_regular_file(ec)) files.push_back(entry.path().generic_string());
  }
  std::sort(files.begin(), files.end());

  LoadStats stats;
  std::unordered_set<std::string> seen_ids;
  const std::size_t window = std::max<std::size_t>(1, opts.window);
  std::vector<Unit> pending;

  auto drain = [&] {
    std::vector<Outcome> outcomes(pending.size());
    parallel_for(pending.size(), opts.workers,
                 [&](std::size_t i) { outcomes[i] = parse_unit(pending[i], opts.parse); });
    for (std::size_t i = 0; i < pending.size(); ++i) {
      ++stats.files;
      auto& out = outcomes[i];
      if (out.doc && !seen_ids.insert(out.doc->id).second) {
        out.error = "duplicate id " + out.doc->id;
        out.doc.reset();
      }
      if (out.doc) {
        ++stats.yielded;
        on_document(std::move(*out.doc));
      } else {
        ++stats.skipped;
        on_skip({pending[i].path, out.error});
      }
    }
    pending.clear();
  };

  for (const auto& f : files) {
    const Kind kind = classify(f);
    if (kind == Kind::kArchive) {
      for (auto& u : expand_archive(f)) {
        pending.push_back(std::move(u));
        if (pending.size() >= window) drain();
      }
      continue;
    }
    Unit u;
    u.path = f;
    u.kind = kind;
    u.stem = stem_of(f);
    pending.push_back(std::move(u));
    if (pending.size() >= window) drain();
  }
  drain();
  return stats;
}

Corpus load_corpus(const fs::path& root, const LoadOptions& opts) {
  Corpus c;
  c.stats = for_each_document(
      root, opts, [&](Document&& d) { c.documents.push_back(std::move(d)); },
      [&](SkipRecord&& s) { c.skipped.push_back(std::move(s)); });
  return c;
}

}  // namespace tforge::corpus
