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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tforge/extraction.hpp"

namespace tforge::dataset {

// One CSV row.
struct Triple {
  std::string subject;
  std::string relation;
  std::string object;

  bool operator==(const Triple&) const = default;
  auto operator<=>(const Triple&) const = default;
};

Triple to_triple(const extraction::Triplet& t);

struct SplitSpec {
  std::size_t train = 10000;
  std::size_t test = 1000;
  std::size_t validation = 200;
  std::uint64_t seed = 42;
};

struct Split {
  std::vector<Triple> train;
  std::vector<Triple> test;
  std::vector<Triple> validation;
};

// Fisher-Yates shuffle with Xoshiro256(seed), then consecutive slices.
// Records beyond the three sizes are dropped. Throws
// Error(kInsufficientRecords) when the sizes exceed the input.
Split shuffle_and_split(std::vector<Triple> records, const SplitSpec& spec);

// Header "subject,relation,object"; fields are quoted only when they hold a
// comma, quote, CR or LF; LF line endings.
std::string to_csv(std::span<const Triple> records);
void write_split_csv(std::span<const Triple> records, const std::filesystem::path& path);

// Accepts LF or CRLF and an optional UTF-8 BOM. Throws Error(kMalformedInput)
// on a wrong header, a bad quote or a row without exactly three fields.
std::vector<Triple> parse_csv(std::string_view data);
std::vector<Triple> read_split_csv(const std::filesystem::path& path);

struct Randomized {
  std::vector<Triple> records;
  // records[i].object came from source row permutation[i].
  std::vector<std::size_t> permutation;
  // Rows with permutation[i] == i.
  std::size_t fixed_points = 0;
  // Rows whose object string is unchanged (includes duplicate objects).
  std::size_t unchanged_objects = 0;
};

// Permutes the object column with a uniform Fisher-Yates permutation
// (identity shuffled by Xoshiro256(seed)); fixed points are allowed.
// Throws Error(kTooFewRecords) for fewer than 2 records.
Randomized randomize_gold(std::span<const Triple> records, std::uint64_t seed);

// Draws replacement objects from a larger pool: the pool indices are
// shuffled and the first records.size() are used.
// Throws Error(kTooFewRecords) when the pool is smaller than the records.
Randomized randomize_gold_from_pool(std::span<const Triple> records,
                                    std::span<const Triple> pool, std::uint64_t seed);

}  // namespace tforge::dataset
