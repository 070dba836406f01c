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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace tforge {

std::uint64_t fnv1a64(std::string_view bytes);

std::string sha256_hex(std::string_view bytes);

// SHA-256 of a file's contents; throws Error(kIo) when unreadable.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace tforge
