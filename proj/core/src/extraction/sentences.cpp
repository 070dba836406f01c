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

#include <cctype>
#include <set>

#include "tforge/extraction.hpp"
#include "tforge/text.hpp"

namespace tforge::extraction {
namespace {

const std::set<std::string, std::less<>>& abbreviations() {
  static const std::set<std::string, std::less<>> kAbbrev = {
      "al.",    "fig.",  "figs.", "vs.",   "e.g.",   "i.e.",  "dr.",    "mr.",   "mrs.",
      "ms.",    "prof.", "approx.", "no.", "nos.",   "ref.",  "refs.",  "eq.",   "eqs.",
      "ca.",    "cf.",   "st.",   "vol.",  "pp.",    "tab.",  "suppl.", "inc.",  "ltd.",
      "co.",    "jr.",   "sr.",   "ph.d.", "u.s.",   "dept.", "univ.",  "resp.", "incl.",
      "min.",   "max.",  "sp.",   "spp.",  "ext.",   "est.",  "viz.",   "sec.",  "ch."};
  return kAbbrev;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

bool starts_sentence(char c) {
  return std::isupper(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
         c == '(' || c == '[' || c == '"';
}

// The whitespace-delimited word ending at end (exclusive), lowercased.
std::string word_before(std::string_view s, std::size_t end) {
  std::size_t begin = end;
  while (begin > 0 && !is_space(s[begin - 1])) --begin;
  while (begin < end && (s[begin] == '(' || s[begin] == '"' || s[begin] == '[')) ++begin;
  return text::to_lower(s.substr(begin, end - begin));
}

bool is_abbreviation(std::string_view s, std::size_t dot_end) {
  if (s[dot_end - 1] != '.') return false;
  const auto word = word_before(s, dot_end);
  if (abbreviations().contains(word)) return true;
  // Single-letter initial such as "J."
  return word.size() == 2 && std::isalpha(static_cast<unsigned char>(word[0]));
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  const std::size_t n = text.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    std::size_t end = i + 1;
    while (end < n && (text[end] == '.' || text[end] == '!' || text[end] == '?')) ++end;
    while (end < n && is_closer(text[end])) ++end;
    if (end >= n || !is_space(text[end])) {
      i = end - 1;
      continue;
    }
    std::size_t next = end;
    while (next < n && is_space(text[next])) ++next;
    if (next >= n || !starts_sentence(text[next]) || is_abbreviation(text, i + 1)) {
      i = end - 1;
      continue;
    }
    const auto sentence = text::trim(text.substr(start, end - start));
    if (!sentence.empty()) out.emplace_back(sentence);
    start = next;
    i = next - 1;
  }
  const auto tail = text::trim(text.substr(std::min(start, n)));
  if (!tail.empty()) out.emplace_back(tail);
  return out;
}

std::vector<std::string> document_sentences(const corpus::Document& doc) {
  std::vector<std::string> out;
  for (const auto& line : text::split(doc.body, '\n')) {
    for (auto& s : split_sentences(line)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace tforge::extraction
