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

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <memory>

#include "corpus/internal.hpp"
#include "tforge/error.hpp"

namespace tforge::corpus::internal {
namespace {

constexpr std::size_t kBlock = 512;

struct GzCloser {
  void operator()(gzFile_s* f) const { gzclose(f); }
};

class GzReader {
 public:
  explicit GzReader(const std::string& path) : file_(gzopen(path.c_str(), "rb")) {
    if (!file_) throw Error(ErrorCode::kIo, "cannot open archive " + path);
  }

  // Reads exactly n bytes; false on clean EOF before any byte.
  bool read_exact(char* dst, std::size_t n) {
    std::size_t got = 0;
    while (got < n) {
      const int r = gzread(file_.get(), dst + got, static_cast<unsigned>(n - got));
      if (r < 0) {
        int errnum = 0;
        throw Error(ErrorCode::kMalformedInput,
                    std::string("gzip stream: ") + gzerror(file_.get(), &errnum));
      }
      if (r == 0) {
        if (got == 0) return false;
        throw Error(ErrorCode::kMalformedInput, "truncated tar archive");
      }
      got += static_cast<std::size_t>(r);
    }
    return true;
  }

 private:
  std::unique_ptr<gzFile_s, GzCloser> file_;
};

std::string field(const char* block, std::size_t offset, std::size_t len) {
  const char* start = block + offset;
  return std::string(start, strnlen(start, len));
}

std::size_t parse_octal(const char* p, std::size_t len) {
  std::size_t v = 0;
  for (std::size_t i = 0; i < len && p[i]; ++i) {
    if (p[i] == ' ') continue;
    if (p[i] < '0' || p[i] > '7') throw Error(ErrorCode::kMalformedInput, "bad tar size field");
    v = v * 8 + static_cast<std::size_t>(p[i] - '0');
  }
  return v;
}

// Extracts "path=" from a pax extended header payload.
std::string pax_path(const std::string& payload) {
  std::size_t pos = 0;
  while (pos < payload.size()) {
    const auto space = payload.find(' ', pos);
    if (space == std::string::npos) break;
    const auto len = std::stoul(payload.substr(pos, space - pos));
    if (len == 0 || pos + len > payload.size()) break;
    const auto record = payload.substr(space + 1, len - (space - pos) - 2);
    if (record.rfind("path=", 0) == 0) return record.substr(5);
    pos += len;
  }
  return {};
}

}  // namespace

std::vector<TarMember> read_tar_gz(const std::string& path) {
  GzReader in(path);
  std::vector<TarMember> members;
  std::array<char, kBlock> header{};
  std::string long_name;
  while (in.read_exact(header.data(), kBlock)) {
    if (std::all_of(header.begin(), header.end(), [](char c) { return c == 0; })) break;
    const std::size_t size = parse_octal(header.data() + 124, 12);
    const char type = header[156];
    std::string data(size, '\0');
    if (size > 0 && !in.read_exact(data.data(), size)) {
      throw Error(ErrorCode::kMalformedInput, "truncated tar member");
    }
    const std::size_t pad = (kBlock - size % kBlock) % kBlock;
    if (pad > 0) {
      std::array<char, kBlock> skip{};
      in.read_exact(skip.data(), pad);
    }
    if (type == 'L') {
      long_name = data.substr(0, strnlen(data.c_str(), data.size()));
      continue;
    }
    if (type == 'x') {
      long_name = pax_path(data);
      continue;
    }
    std::string name = long_name;
    long_name.clear();
    if (name.empty()) {
      const std::string prefix = field(header.data(), 345, 155);
      name = field(header.data(), 0, 100);
      if (!prefix.empty()) name = prefix + "/" + name;
    }
    if (type == '0' || type == '\0' || type == '7') {
      members.push_back({std::move(name), std::move(data)});
    }
  }
  return members;
}

}  // namespace tforge::corpus::internal
