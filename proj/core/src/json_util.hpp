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

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "tforge/error.hpp"

namespace tforge::jsonl {

using nlohmann::json;

// Calls fn for each non-blank line parsed as JSON. Throws Error(kIo) when the
// file cannot be opened and Error(kMalformedInput) on a bad line.
inline void for_each(const std::filesystem::path& path, const std::function<void(const json&)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json value;
    try {
      value = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kMalformedInput,
                  path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
    fn(value);
  }
}

// Compact, key-sorted, UTF-8 passthrough; one record per line.
inline std::string dump_line(const json& value) {
  return value.dump(-1, ' ', false, json::error_handler_t::replace) + "\n";
}

class Writer {
 public:
  Writer(const std::filesystem::path& path, bool append = false)
      : out_(path, append ? std::ios::binary | std::ios::app : std::ios::binary | std::ios::trunc),
        path_(path) {
    if (!out_) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  }

  void write(const json& value) {
    out_ << dump_line(value);
    if (!out_) throw Error(ErrorCode::kIo, "write failed: " + path_.string());
  }

  void flush() { out_.flush(); }

 private:
  std::ofstream out_;
  std::filesystem::path path_;
};

}  // namespace tforge::jsonl
