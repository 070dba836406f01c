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
#include <cmath>
#include <limits>

#include "tforge/error.hpp"
#include "tforge/metrics.hpp"

namespace tforge::metrics {
namespace {

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

void TokenEmbeddings::validate() const {
  if (tokens.size() != vectors.size()) {
    throw Error(ErrorCode::kProtocol, "token/vector count mismatch: " +
                                          std::to_string(tokens.size()) + " vs " +
                                          std::to_string(vectors.size()));
  }
  const std::size_t d = dim();
  for (const auto& v : vectors) {
    if (v.size() != d || d == 0) throw Error(ErrorCode::kProtocol, "ragged embedding vectors");
    for (double x : v) {
      if (!std::isfinite(x)) throw Error(ErrorCode::kProtocol, "non-finite embedding component");
    }
  }
}

ScorePair bertscore(const TokenEmbeddings& candidate, const TokenEmbeddings& reference) {
  if (candidate.vectors.empty() || reference.vectors.empty()) {
    throw Error(ErrorCode::kEmptySide, "BERTScore needs tokens on both sides");
  }
  if (candidate.dim() != reference.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "embedding dimensions differ: " + std::to_string(candidate.dim()) + " vs " +
                    std::to_string(reference.dim()));
  }
  const std::size_t nc = candidate.vectors.size();
  const std::size_t nr = reference.vectors.size();
  std::vector<double> cn(nc), rn(nr);
  for (std::size_t i = 0; i < nc; ++i) cn[i] = norm(candidate.vectors[i]);
  for (std::size_t j = 0; j < nr; ++j) rn[j] = norm(reference.vectors[j]);

  constexpr double kLow = -std::numeric_limits<double>::infinity();
  std::vector<double> row_max(nc, kLow), col_max(nr, kLow);
  for (std::size_t i = 0; i < nc; ++i) {
    const auto& a = candidate.vectors[i];
    for (std::size_t j = 0; j < nr; ++j) {
      const auto& b = reference.vectors[j];
      double dot = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k) dot += a[k] * b[k];
      const double denom = cn[i] * rn[j];
      const double s = denom > 0.0 ? std::clamp(dot / denom, -1.0, 1.0) : 0.0;
      row_max[i] = std::max(row_max[i], s);
      col_max[j] = std::max(col_max[j], s);
    }
  }
  // Summing in sorted order makes the result independent of token order.
  std::sort(row_max.begin(), row_max.end());
  std::sort(col_max.begin(), col_max.end());
  double p = 0.0, r = 0.0;
  for (double x : row_max) p += x;
  for (double x : col_max) r += x;
  p = std::clamp(p / static_cast<double>(nc), -1.0, 1.0);
  r = std::clamp(r / static_cast<double>(nr), -1.0, 1.0);
  return make_score(p, r);
}

}  // namespace tforge::metrics
