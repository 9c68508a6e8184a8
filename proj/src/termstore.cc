// Copyright 2026 The OKB Authors.
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

#include "okb/termstore.h"

#include <algorithm>
#include <array>

#include "okb/error.h"
#include "okb/text.h"

namespace okb {

namespace {

constexpr std::array<std::string_view, 6> kPatternNames = {"ABBR",   "N",          "ADJ_N",
                                                           "N_NGEN", "ADJ_N_NGEN", "N_ADJ_N"};
constexpr std::array<std::string_view, 3> kKindNames = {"single", "multi", "abbr"};

std::string join(const std::vector<std::string> &words) {
  std::string out;
  for (const std::string &w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace

std::string_view to_string(TermPattern pattern) {
  return kPatternNames[static_cast<std::size_t>(pattern)];
}

std::string_view to_string(TermKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<TermPattern> parse_term_pattern(std::string_view s) {
  for (std::size_t i = 0; i < kPatternNames.size(); ++i) {
    if (kPatternNames[i] == s) return static_cast<TermPattern>(i);
  }
  return std::nullopt;
}

std::optional<TermKind> parse_term_kind(std::string_view s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == s) return static_cast<TermKind>(i);
  }
  return std::nullopt;
}

TermKind kind_of(TermPattern pattern) {
  switch (pattern) {
    case TermPattern::kAbbr: return TermKind::kAbbr;
    case TermPattern::kN: return TermKind::kSingle;
    default: return TermKind::kMulti;
  }
}

std::size_t arity(TermPattern pattern) {
  switch (pattern) {
    case TermPattern::kAbbr:
    case TermPattern::kN:
      return 1;
    case TermPattern::kAdjN:
    case TermPattern::kNNgen:
      return 2;
    case TermPattern::kAdjNNgen:
    case TermPattern::kNAdjN:
      return 3;
  }
  return 1;
}

std::size_t head_position(TermPattern pattern) {
  switch (pattern) {
    case TermPattern::kAdjN:
    case TermPattern::kAdjNNgen:
      return 1;
    default:
      return 0;
  }
}

bool id_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string Term::label() const { return join(lemmas); }

const Term *TermArchive::find(std::string_view id) const {
  for (const Term &t : terms) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

Term *TermArchive::find(std::string_view id) {
  for (Term &t : terms) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

std::vector<Term> filter_terms(const TermArchive &archive, std::optional<TermKind> kind) {
  std::vector<Term> out;
  for (const Term &t : archive.terms) {
    if (!kind || t.kind == *kind) out.push_back(t);
  }
  return out;
}

std::vector<Term> search(const TermArchive &archive, std::string_view query) {
  const std::string needle = text::fold_case(query);
  std::vector<Term> out;
  for (const Term &t : archive.terms) {
    if (text::fold_case(t.label()).find(needle) != std::string::npos) out.push_back(t);
  }
  return out;
}

std::vector<Sentence> sentences_of(const TermArchive &archive,
                                   std::span<const Document> documents,
                                   std::string_view term_id) {
  const Term *term = archive.find(term_id);
  if (!term) throw Error(ErrorCode::kNotFound, "no such term");
  std::vector<Sentence> out;
  for (const Document &doc : documents) {
    for (const Sentence &s : doc.sentences) {
      if (std::binary_search(term->sentences.begin(), term->sentences.end(),
                             SentenceRef{doc.id, s.index})) {
        out.push_back(s);
      }
    }
  }
  return out;
}

TermArchive set_selected(TermArchive archive, std::string_view term_id, bool on) {
  Term *term = archive.find(term_id);
  if (!term) throw Error(ErrorCode::kNotFound, "no such term");
  term->selected = on;
  return archive;
}

std::vector<Term> selection(const TermArchive &archive) {
  std::vector<Term> out;
  for (const Term &t : archive.terms) {
    if (t.selected) out.push_back(t);
  }
  return out;
}

std::string export_selection(const TermArchive &archive) {
  std::string out;
  for (const Term &t : archive.terms) {
    if (!t.selected) continue;
    out += t.label();
    out += '\n';
  }
  return out;
}

std::string export_archive(const TermArchive &archive) {
  std::string out;
  for (const Term &t : archive.terms) {
    out += t.label();
    out += '\t';
    out += to_string(t.pattern);
    out += '\t';
    out += std::to_string(t.frequency);
    out += '\t';
    for (std::size_t i = 0; i < t.sentences.size(); ++i) {
      if (i > 0) out += ',';
      out += t.sentences[i].doc_id;
      out += ':';
      out += std::to_string(t.sentences[i].sentence);
    }
    out += '\n';
  }
  return out;
}

const Term *find_term(const TermArchive &archive, std::string_view id_or_label) {
  if (const Term *t = archive.find(id_or_label)) return t;
  for (const Term &t : archive.terms) {
    if (t.label() == id_or_label) return &t;
  }
  return nullptr;
}

}  // namespace okb
