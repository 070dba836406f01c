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

namespace tforge::text {

// ASCII lowercase; bytes >= 0x80 pass through untouched.
std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s);

// Collapses every run of whitespace (including newlines) into one space and
// trims both ends.
std::string collapse_whitespace(std::string_view s);

bool is_valid_utf8(std::string_view s);

// Lowercases, splits on any ASCII non-alphanumeric byte and drops empty
// pieces. Non-ASCII bytes are treated as word characters so UTF-8 sequences
// are never split.
std::vector<std::string> word_tokens(std::string_view s);

// word_tokens() minus tokens of length 1; the vectorizer tokenization.
std::vector<std::string> index_tokens(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace tforge::text
