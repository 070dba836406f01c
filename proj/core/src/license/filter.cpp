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

#include "tforge/error.hpp"
#include "tforge/license.hpp"

namespace tforge::license {

LicenseFilterResult filter_by_license(std::vector<corpus::Document> docs,
                                      const std::set<LicenseTag>& allowed,
                                      LicenseResolver& resolver) {
  if (allowed.empty()) throw Error(ErrorCode::kInvalidArgument, "allowed license set is empty");
  LicenseFilterResult result;
  result.funnel.input = docs.size();

  std::vector<std::string> unresolved_ids;
  std::vector<std::size_t> unresolved_pos;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (docs[i].license == LicenseTag::kUnknown) {
      unresolved_ids.push_back(docs[i].id);
      unresolved_pos.push_back(i);
    }
  }
  if (!unresolved_ids.empty()) {
    const auto tags = resolver.resolve_many(unresolved_ids);
    for (std::size_t k = 0; k < tags.size(); ++k) docs[unresolved_pos[k]].license = tags[k];
    result.funnel.resolved_by_registry = unresolved_ids.size();
  }

  for (auto& d : docs) {
    const bool keep = d.license != LicenseTag::kUnknown && allowed.contains(d.license);
    result.decisions.push_back({d.id, d.license, keep});
    if (keep) result.kept.push_back(std::move(d));
  }
  result.funnel.kept = result.kept.size();
  return result;
}

}  // namespace tforge::license
