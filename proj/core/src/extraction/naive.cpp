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
#include <optional>
#include <set>
#include <string>
#include <unordered_set>

#include "tforge/extraction.hpp"
#include "tforge/text.hpp"

namespace tforge::extraction {
namespace {

using WordSet = std::unordered_set<std::string>;

// Regular verb stems. Inflected forms (-s/-es, -ed/-d, -ing) are derived.
const WordSet& stems() {
  static const WordSet kStems = {
      "inhibit", "activate", "induce", "reduce", "cause", "target", "block", "suppress",
      "prolong", "promote", "improve", "enhance", "trigger", "prevent", "include", "require",
      "support", "reflect", "limit", "increase", "decrease", "regulate", "modulate", "mediate",
      "bind", "encode", "express", "interact", "associate", "correlate", "contribute", "result",
      "affect", "influence", "impair", "restore", "attenuate", "abolish", "abrogate", "stimulate",
      "phosphorylate", "degrade", "cleave", "recruit", "accumulate", "elevate", "lower", "raise",
      "alter", "change", "protect", "sensitize", "confer", "antagonize", "potentiate",
      "facilitate", "accelerate", "delay", "arrest", "kill", "destroy", "eliminate", "produce",
      "generate", "form", "reverse", "predict", "indicate", "suggest", "demonstrate", "reveal",
      "confirm", "identify", "detect", "measure", "assess", "evaluate", "observe", "report",
      "describe", "compare", "study", "investigate", "examine", "analyze", "test", "treat",
      "administer", "receive", "develop", "exhibit", "display", "contain", "comprise", "involve",
      "represent", "remain", "appear", "seem", "occur", "exist", "depend", "rely", "respond",
      "react", "present", "provide", "offer", "yield", "achieve", "reach", "exceed", "surpass",
      "outperform", "replace", "compete", "link", "relate", "connect", "use", "need", "work",
      "approach", "control", "process", "impact", "damage", "acquire", "harbor", "carry",
      "transmit", "infect", "colonize", "invade", "metastasize", "proliferate", "differentiate",
      "migrate", "survive", "enable", "allow", "drive", "disrupt", "upregulate", "downregulate",
      "signal", "catalyze", "convert", "transport", "secrete", "release", "deplete", "restrict",
      "counteract", "characterize", "define", "establish", "maintain", "mitigate", "worsen",
      "aggravate", "exacerbate", "alleviate", "relieve", "ameliorate", "modify", "shorten",
      "lengthen", "extend", "lack", "share", "resemble", "resist", "tolerate", "undergo",
      "precede", "follow", "accompany", "coincide", "interfere", "integrate", "localize",
      "colocalize", "silence", "knock", "overexpress", "amplify", "mutate", "delete", "fuse",
      "rearrange", "methylate", "acetylate", "ubiquitinate", "cleave", "sequester", "stabilize",
      "destabilize", "repress", "derepress", "transactivate", "transform", "immortalize"};
  return kStems;
}

// Stems whose bare form is more often a noun; only inflections count.
const WordSet& inflection_only() {
  static const WordSet kSet = {"work",   "use",     "increase", "decrease", "change", "report",
                               "result", "approach", "study",   "need",     "control", "process",
                               "impact", "damage",  "test",     "form",     "lack",   "signal",
                               "target", "block",   "support",  "limit",    "cause",  "trigger",
                               "delay",  "arrest",  "release",  "transport", "measure", "share",
                               "yield",  "present", "link",     "knock",    "follow", "display",
                               "offer",  "reach",   "influence", "treat",   "drive",  "fuse"};
  return kSet;
}

const WordSet& irregular() {
  static const WordSet kSet = {
      "is", "are", "was", "were", "be", "been", "being", "am", "has", "have", "had", "do",
      "does", "did", "done", "can", "could", "may", "might", "must", "shall", "should", "will",
      "would", "shown", "showed", "shows", "showing", "show", "led", "leads", "leading",
      "overcome", "overcomes", "overcame", "overcoming", "become", "becomes", "became",
      "becoming", "made", "makes", "making", "takes", "took", "taken", "taking", "gives", "gave",
      "given", "giving", "found", "finds", "bound", "binds", "kept", "keeps", "held", "holds",
      "brought", "brings", "drove", "driven", "rose", "rises", "risen", "began", "begins",
      "begun", "seen", "sees", "saw", "gets", "got", "gotten", "grew", "grows", "grown", "lost",
      "loses", "spread", "spreads", "underwent", "undergone", "stopped", "stops", "stopping",
      "occurred", "occurring", "transmitted", "transmitting", "upregulated", "downregulated",
      "died", "dies", "dying", "felt", "meant", "means", "thought", "known", "knows", "knew",
      "went", "goes", "gone", "came", "comes", "run", "ran", "runs", "set", "sets", "put",
      "puts", "cut", "cuts", "hit", "hits", "let", "lets", "showed", "sought", "seeks", "told",
      "tells", "wrote", "written", "writes"};
  return kSet;
}

const WordSet& auxiliaries() {
  static const WordSet kSet = {"is",    "are",   "was",   "were",   "be",    "been", "being",
                               "am",    "has",   "have",  "had",    "do",    "does", "did",
                               "can",   "could", "may",   "might",  "must",  "shall",
                               "should", "will", "would"};
  return kSet;
}

const WordSet& prepositions() {
  static const WordSet kSet = {"with", "to",   "in",   "by",      "of",   "for",  "on",
                               "from", "into", "onto", "against", "upon", "via",  "across",
                               "through", "within", "toward", "towards", "at"};
  return kSet;
}

const WordSet& subordinators() {
  static const WordSet kSet = {"because", "although", "though", "while", "whereas", "which",
                               "that",    "when",     "since",  "if",    "unless",  "after",
                               "before",  "until",    "where",  "whether"};
  return kSet;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_stem(const std::string& w) { return stems().contains(w); }

// Inflected form of a known stem: -s/-es, -ed/-d, -ing (with e-drop and
// y -> i for -es/-ed).
bool is_inflection(const std::string& w) {
  auto stem_of = [&](std::size_t cut, std::string_view add) {
    return is_stem(w.substr(0, w.size() - cut) + std::string(add));
  };
  if (ends_with(w, "ies") && stem_of(3, "y")) return true;
  if (ends_with(w, "es") && stem_of(2, "")) return true;
  if (ends_with(w, "s") && stem_of(1, "")) return true;
  if (ends_with(w, "ied") && stem_of(3, "y")) return true;
  if (ends_with(w, "ed") && stem_of(2, "")) return true;
  if (ends_with(w, "d") && stem_of(1, "")) return true;
  if (ends_with(w, "ing") && (stem_of(3, "") || stem_of(3, "e"))) return true;
  return false;
}

bool is_verb_like(const std::string& w) {
  if (irregular().contains(w)) return true;
  if (is_stem(w)) return !inflection_only().contains(w);
  return is_inflection(w);
}

bool is_punct(char c) {
  return c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?' || c == '"' ||
         c == '(' || c == ')' || c == '[' || c == ']';
}

struct Token {
  std::string text;  // as written, surrounding punctuation stripped
  std::string key;   // lowercased
};

std::vector<Token> tokenize(std::string_view clause) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < clause.size()) {
    while (i < clause.size() && std::isspace(static_cast<unsigned char>(clause[i]))) ++i;
    std::size_t j = i;
    while (j < clause.size() && !std::isspace(static_cast<unsigned char>(clause[j]))) ++j;
    std::string_view word = clause.substr(i, j - i);
    while (!word.empty() && is_punct(word.front())) word.remove_prefix(1);
    while (!word.empty() && is_punct(word.back())) word.remove_suffix(1);
    if (!word.empty()) out.push_back({std::string(word), text::to_lower(word)});
    i = j;
  }
  return out;
}

std::string join_tokens(const std::vector<Token>& toks, std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t k = begin; k < end; ++k) {
    if (!out.empty()) out += ' ';
    out += toks[k].text;
  }
  return out;
}

std::vector<std::string> split_clauses(std::string_view sentence) {
  std::vector<std::string> clauses;
  std::string current;
  std::size_t i = 0;
  while (i < sentence.size()) {
    if (sentence.compare(i, 6, ", and ") == 0) {
      clauses.push_back(current);
      current.clear();
      i += 6;
    } else if (sentence.compare(i, 2, "; ") == 0) {
      clauses.push_back(current);
      current.clear();
      i += 2;
    } else {
      current += sentence[i++];
    }
  }
  clauses.push_back(current);
  return clauses;
}

std::optional<RawTriple> clause_triple(std::string_view clause) {
  const auto toks = tokenize(clause);
  // The verb needs a subject in front of it, so position 0 is not considered.
  std::size_t verb = 0;
  for (std::size_t k = 1; k < toks.size(); ++k) {
    if (subordinators().contains(toks[k].key)) return std::nullopt;
    if (is_verb_like(toks[k].key)) {
      verb = k;
      break;
    }
  }
  if (verb == 0) return std::nullopt;
  std::size_t rel_end = verb + 1;
  if (auxiliaries().contains(toks[verb].key)) {
    while (rel_end < toks.size() &&
           (toks[rel_end].key == "not" || is_verb_like(toks[rel_end].key))) {
      ++rel_end;
    }
  }
  if (rel_end < toks.size() && prepositions().contains(toks[rel_end].key)) ++rel_end;
  std::size_t obj_end = rel_end;
  while (obj_end < toks.size() && !subordinators().contains(toks[obj_end].key)) ++obj_end;
  if (obj_end == rel_end) return std::nullopt;
  return RawTriple{join_tokens(toks, 0, verb), join_tokens(toks, verb, rel_end),
                   join_tokens(toks, rel_end, obj_end), 1.0};
}

}  // namespace

std::vector<RawTriple> naive_extract(std::string_view sentence) {
  std::vector<RawTriple> out;
  for (const auto& clause : split_clauses(sentence)) {
    if (auto t = clause_triple(clause)) out.push_back(std::move(*t));
  }
  return out;
}

}  // namespace tforge::extraction
