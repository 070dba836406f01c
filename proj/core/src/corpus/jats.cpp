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

#include <expat.h>

#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "corpus/internal.hpp"
#include "tforge/error.hpp"
#include "tforge/text.hpp"

namespace tforge::corpus::internal {
namespace {

// Subtrees whose text never reaches the document.
const std::unordered_set<std::string_view> kDroppedElements = {
    "fig",   "fig-group", "table-wrap", "table-wrap-group", "table",      "ref-list",
    "back",  "label",     "caption",    "disp-formula",     "tex-math",   "mml:math",
    "title", "sub-article", "response", "supplementary-material", "media", "graphic",
    "object-id", "alternatives"};

const std::unordered_set<std::string_view> kAccessionTypes = {"pmc", "pmcid", "pmcaid",
                                                              "accession"};

enum class Zone { kNone, kAbstract, kBody };

struct State {
  std::vector<std::string> stack;
  int drop_depth = 0;   // > 0 while inside a dropped subtree
  int para_depth = 0;   // nesting of <p> in a kept zone
  Zone zone = Zone::kNone;
  int zone_depth = 0;

  std::string accession;
  std::string accession_type;
  bool in_accession = false;
  std::string pending_id;

  bool in_title = false;
  bool title_seen = false;
  std::string title;

  std::string paragraph;
  std::vector<std::string> abstract_paragraphs;
  std::vector<std::string> body_paragraphs;

  bool in_license = false;
  bool in_license_text = false;
  std::vector<std::string> license_evidence;
  std::string license_text;
};

const char* attr(const XML_Char** atts, std::string_view name) {
  for (int i = 0; atts[i]; i += 2) {
    if (name == atts[i]) return atts[i + 1];
  }
  return nullptr;
}

bool in_element(const State& st, std::string_view name) {
  for (const auto& e : st.stack) {
    if (e == name) return true;
  }
  return false;
}

void XMLCALL on_start(void* data, const XML_Char* name, const XML_Char** atts) {
  auto& st = *static_cast<State*>(data);
  const std::string_view el(name);
  st.stack.emplace_back(el);

  if (st.drop_depth > 0) {
    ++st.drop_depth;
    return;
  }
  if (el == "license") {
    st.in_license = true;
    for (const char* key : {"license-type", "xlink:href", "href"}) {
      if (const char* v = attr(atts, key)) st.license_evidence.emplace_back(v);
    }
    return;
  }
  if (st.in_license && (el == "ali:license_ref" || el == "license_ref" || el == "license-p")) {
    st.in_license_text = true;
    st.license_text.clear();
    return;
  }
  if (el == "article-id" && st.accession.empty()) {
    const char* type = attr(atts, "pub-id-type");
    if (type && kAccessionTypes.contains(type)) {
      st.in_accession = true;
      st.accession_type = type;
      st.pending_id.clear();
    }
    return;
  }
  if (el == "article-title" && !st.title_seen && in_element(st, "title-group") &&
      in_element(st, "article-meta")) {
    st.in_title = true;
    return;
  }
  if (el == "abstract" && st.zone == Zone::kNone) {
    st.zone = Zone::kAbstract;
    st.zone_depth = static_cast<int>(st.stack.size());
    return;
  }
  if (el == "body" && st.zone == Zone::kNone) {
    st.zone = Zone::kBody;
    st.zone_depth = static_cast<int>(st.stack.size());
    return;
  }
  if (kDroppedElements.contains(el) && !st.in_title) {
    st.drop_depth = 1;
    return;
  }
  if (el == "p" && st.zone != Zone::kNone) ++st.para_depth;
}

void XMLCALL on_end(void* data, const XML_Char* name) {
  auto& st = *static_cast<State*>(data);
  const std::string_view el(name);
  const int depth = static_cast<int>(st.stack.size());
  st.stack.pop_back();

  if (st.drop_depth > 0) {
    --st.drop_depth;
    return;
  }
  if (st.in_license_text &&
      (el == "ali:license_ref" || el == "license_ref" || el == "license-p")) {
    st.license_evidence.push_back(st.license_text);
    st.in_license_text = false;
    return;
  }
  if (el == "license") {
    st.in_license = false;
    return;
  }
  if (st.in_accession && el == "article-id") {
    st.in_accession = false;
    st.accession = std::string(text::trim(st.pending_id));
    const bool digits_only =
        !st.accession.empty() &&
        st.accession.find_first_not_of("0123456789") == std::string::npos;
    if (st.accession_type == "pmc" && digits_only) st.accession = "PMC" + st.accession;
    return;
  }
  if (st.in_title && el == "article-title") {
    st.in_title = false;
    st.title_seen = true;
    return;
  }
  if (el == "p" && st.para_depth > 0) {
    if (--st.para_depth == 0) {
      auto p = text::collapse_whitespace(st.paragraph);
      st.paragraph.clear();
      if (!p.empty()) {
        (st.zone == Zone::kAbstract ? st.abstract_paragraphs : st.body_paragraphs)
            .push_back(std::move(p));
      }
    }
    return;
  }
  if (st.zone != Zone::kNone && depth == st.zone_depth) st.zone = Zone::kNone;
}

void XMLCALL on_text(void* data, const XML_Char* s, int len) {
  auto& st = *static_cast<State*>(data);
  const std::string_view chunk(s, static_cast<std::size_t>(len));
  if (st.drop_depth > 0) return;
  if (st.in_license_text) {
    st.license_text.append(chunk);
    return;
  }
  if (st.in_accession) {
    st.pending_id.append(chunk);
  } else if (st.in_title) {
    st.title.append(chunk);
  } else if (st.para_depth > 0) {
    st.paragraph.append(chunk);
  }
}

// Entities declared in an external DTD that expat did not load.
void XMLCALL on_skipped_entity(void* data, const XML_Char*, int) { on_text(data, " ", 1); }

struct ParserDeleter {
  void operator()(XML_Parser p) const { XML_ParserFree(p); }
};

}  // namespace

Document parse_jats(std::string_view raw, std::string_view fallback_id, const ParseOptions& opts) {
  State st;
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, ParserDeleter> parser(
      XML_ParserCreate("UTF-8"));
  if (!parser) throw Error(ErrorCode::kMalformedInput, "cannot create XML parser");
  XML_SetUserData(parser.get(), &st);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);
  XML_SetSkippedEntityHandler(parser.get(), on_skipped_entity);
  if (XML_Parse(parser.get(), raw.data(), static_cast<int>(raw.size()), XML_TRUE) ==
      XML_STATUS_ERROR) {
    throw Error(ErrorCode::kMalformedInput,
                std::string("XML line ") +
                    std::to_string(XML_GetCurrentLineNumber(parser.get())) + ": " +
                    XML_ErrorString(XML_GetErrorCode(parser.get())));
  }

  Document doc;
  doc.id = st.accession.empty() ? std::string(fallback_id) : st.accession;
  doc.title = text::collapse_whitespace(st.title);
  std::vector<std::string> paragraphs = std::move(st.abstract_paragraphs);
  if (!opts.abstracts_only) {
    for (auto& p : st.body_paragraphs) paragraphs.push_back(std::move(p));
  }
  doc.body = text::join(paragraphs, "\n");
  if (doc.title.empty() && doc.body.empty()) {
    throw Error(ErrorCode::kMalformedInput, "no title or body paragraphs");
  }

  // The first recognized CC designator wins; unrecognized evidence means OTHER.
  doc.license = st.license_evidence.empty() ? LicenseTag::kUnknown : LicenseTag::kOther;
  for (const auto& ev : st.license_evidence) {
    const auto tag = classify_license(ev);
    if (tag == LicenseTag::kCC0 || tag == LicenseTag::kCC_BY || tag == LicenseTag::kCC_BY_NC) {
      doc.license = tag;
      break;
    }
  }
  return doc;
}

}  // namespace tforge::corpus::internal
