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

#include <map>
#include <vector>

#include "tforge/error.hpp"
#include "tforge/metrics.hpp"
#include "tforge/text.hpp"

namespace tforge::metrics {
namespace {

using Gram = std::vector<std::string_view>;

std::map<Gram, std::size_t> count_ngrams(std::span<const std::string> toks, std::size_t n) {
  std::map<Gram, std::size_t> counts;
  if (toks.size() < n) return counts;
  for (std::size_t i = 0; i + n <= toks.size(); ++i) {
    Gram g(toks.begin() + static_cast<std::ptrdiff_t>(i),
           toks.begin() + static_cast<std::ptrdiff_t>(i + n));
    ++counts[g];
  }
  return counts;
}

}  // namespace

ScorePair make_score(double precision, double recall) {
  const double sum = precision + recall;
  return {precision, recall, sum > 0.0 ? 2.0 * precision * recall / sum : 0.0};
}

std::vector<std::string> tokenize_for_rouge(std::string_view text) {
  return text::word_tokens(text);
}

ScorePair rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference,
                  std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "ROUGE-N needs n >= 1");
  const auto cand = count_ngrams(candidate, n);
  const auto ref = count_ngrams(reference, n);
  std::size_t overlap = 0;
  for (const auto& [gram, c] : cand) {
    const auto it = ref.find(gram);
    if (it != ref.end()) overlap += std::min(c, it->second);
  }
  const std::size_t cand_total = candidate.size() >= n ? candidate.size() - n + 1 : 0;
  const std::size_t ref_total = reference.size() >= n ? reference.size() - n + 1 : 0;
  return make_score(static_cast<double>(overlap) / static_cast<double>(std::max<std::size_t>(1, cand_total)),
                    static_cast<double>(overlap) / static_cast<double>(std::max<std::size_t>(1, ref_total)));
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

ScorePair rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference) {
  const double l = static_cast<double>(lcs_length(candidate, reference));
  return make_score(candidate.empty() ? 0.0 : l / static_cast<double>(candidate.size()),
                    reference.empty() ? 0.0 : l / static_cast<double>(reference.size()));
}

}  // namespace tforge::metrics
