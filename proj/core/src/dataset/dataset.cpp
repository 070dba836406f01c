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

#include <fstream>
#include <numeric>
#include <sstream>

#include "tforge/dataset.hpp"
#include "tforge/error.hpp"
#include "tforge/rng.hpp"

namespace tforge::dataset {
namespace {

constexpr std::string_view kHeader = "subject,relation,object";

void append_field(std::string& out, std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    out += field;
    return;
  }
  out += '"';
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

Randomized finish(std::span<const Triple> records, std::span<const Triple> source,
                  std::vector<std::size_t> perm) {
  Randomized r;
  r.records.assign(records.begin(), records.end());
  for (std::size_t i = 0; i < records.size(); ++i) {
    r.records[i].object = source[perm[i]].object;
    if (perm[i] == i && source.data() == records.data()) ++r.fixed_points;
    if (r.records[i].object == records[i].object) ++r.unchanged_objects;
  }
  r.permutation = std::move(perm);
  return r;
}

}  // namespace

Triple to_triple(const extraction::Triplet& t) { return {t.subject, t.relation, t.object}; }

Split shuffle_and_split(std::vector<Triple> records, const SplitSpec& spec) {
  const std::size_t need = spec.train + spec.test + spec.validation;
  if (need > records.size()) {
    throw Error(ErrorCode::kInsufficientRecords,
                "split needs " + std::to_string(need) + " records, have " +
                    std::to_string(records.size()));
  }
  Xoshiro256 rng(spec.seed);
  fisher_yates(std::span<Triple>(records), rng);
  Split s;
  auto it = std::make_move_iterator(records.begin());
  s.train.assign(it, it + spec.train);
  it += spec.train;
  s.test.assign(it, it + spec.test);
  it += spec.test;
  s.validation.assign(it, it + spec.validation);
  return s;
}

std::string to_csv(std::span<const Triple> records) {
  std::string out(kHeader);
  out += '\n';
  for (const auto& r : records) {
    append_field(out, r.subject);
    out += ',';
    append_field(out, r.relation);
    out += ',';
    append_field(out, r.object);
    out += '\n';
  }
  return out;
}

void write_split_csv(std::span<const Triple> records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  const auto data = to_csv(records);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

std::vector<Triple> parse_csv(std::string_view data) {
  if (data.substr(0, 3) == "\xEF\xBB\xBF") data.remove_prefix(3);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t i = 0;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };
  while (i < data.size()) {
    const char c = data[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < data.size() && data[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        quoted = false;
        ++i;
        if (i < data.size() && data[i] != ',' && data[i] != '\n' && data[i] != '\r') {
          throw Error(ErrorCode::kMalformedInput, "CSV: text after closing quote");
        }
        continue;
      }
      field += c;
      ++i;
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
      ++i;
    } else if (c == ',') {
      end_field();
      ++i;
    } else if (c == '\n' || c == '\r') {
      end_row();
      i += (c == '\r' && i + 1 < data.size() && data[i + 1] == '\n') ? 2 : 1;
    } else {
      if (c == '"') throw Error(ErrorCode::kMalformedInput, "CSV: stray quote");
      field += c;
      field_started = true;
      ++i;
    }
  }
  if (quoted) throw Error(ErrorCode::kMalformedInput, "CSV: unterminated quote");
  if (field_started || !row.empty()) end_row();

  if (rows.empty()) throw Error(ErrorCode::kMalformedInput, "CSV: missing header");
  const auto& header = rows.front();
  if (header.size() != 3 || header[0] != "subject" || header[1] != "relation" ||
      header[2] != "object") {
    throw Error(ErrorCode::kMalformedInput, "CSV: header must be subject,relation,object");
  }
  std::vector<Triple> out;
  out.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != 3) {
      throw Error(ErrorCode::kMalformedInput,
                  "CSV: row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                      " fields");
    }
    out.push_back({std::move(rows[r][0]), std::move(rows[r][1]), std::move(rows[r][2])});
  }
  return out;
}

std::vector<Triple> read_split_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_csv(ss.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.message());
  }
}

Randomized randomize_gold(std::span<const Triple> records, std::uint64_t seed) {
  if (records.size() < 2) {
    throw Error(ErrorCode::kTooFewRecords, "randomized gold needs at least 2 records");
  }
  std::vector<std::size_t> perm(records.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Xoshiro256 rng(seed);
  fisher_yates(std::span<std::size_t>(perm), rng);
  return finish(records, records, std::move(perm));
}

Randomized randomize_gold_from_pool(std::span<const Triple> records,
                                    std::span<const Triple> pool, std::uint64_t seed) {
  if (records.size() < 2) {
    throw Error(ErrorCode::kTooFewRecords, "randomized gold needs at least 2 records");
  }
  if (pool.size() < records.size()) {
    throw Error(ErrorCode::kTooFewRecords, "object pool is smaller than the evaluated set");
  }
  std::vector<std::size_t> perm(pool.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Xoshiro256 rng(seed);
  fisher_yates(std::span<std::size_t>(perm), rng);
  perm.resize(records.size());
  return finish(records, pool, std::move(perm));
}

}  // namespace tforge::dataset
