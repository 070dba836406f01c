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

#include <string>
#include <string_view>
#include <vector>

#include "tforge/corpus.hpp"

namespace tforge::corpus::internal {

Document parse_jats(std::string_view raw, std::string_view fallback_id, const ParseOptions& opts);

struct TarMember {
  std::string name;
  std::string data;
};

// Regular-file members of a gzip-compressed tar archive, in archive order.
// Throws Error(kMalformedInput) on a corrupt stream.
std::vector<TarMember> read_tar_gz(const std::string& path);

}  // namespace tforge::corpus::internal
