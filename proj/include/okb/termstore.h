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

#ifndef OKB_TERMSTORE_H_
#define OKB_TERMSTORE_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "okb/corpus.h"

namespace okb {

enum class TermPattern { kAbbr, kN, kAdjN, kNNgen, kAdjNNgen, kNAdjN };
enum class TermKind { kSingle, kMulti, kAbbr };

std::string_view to_string(TermPattern pattern);
std::string_view to_string(TermKind kind);
std::optional<TermPattern> parse_term_pattern(std::string_view s);
std::optional<TermKind> parse_term_kind(std::string_view s);  // single|multi|abbr
TermKind kind_of(TermPattern pattern);
std::size_t arity(TermPattern pattern);
// Offset of the head noun inside a match: the single NOUN of ADJ_N, the
// first NOUN of the three-word patterns.
std::size_t head_position(TermPattern pattern);

// Compares generated ids ("d2" < "d10") by length, then bytes.
bool id_less(std::string_view a, std::string_view b);

struct SentenceRef {
  std::string doc_id;
  std::size_t sentence = 0;

  bool operator==(const SentenceRef &) const = default;
  bool operator<(const SentenceRef &other) const {
    if (doc_id != other.doc_id) return id_less(doc_id, other.doc_id);
    return sentence < other.sentence;
  }
};

struct Term {
  std::string id;
  // Display normal form, e.g. {"двійкова", "система", "числення"}.
  std::vector<std::string> lemmas;
  // Citation lemmas the occurrences were grouped by.
  std::vector<std::string> key;
  TermPattern pattern = TermPattern::kN;
  TermKind kind = TermKind::kSingle;
  std::size_t frequency = 0;
  std::vector<SentenceRef> sentences;  // sorted, unique
  bool selected = false;

  std::string label() const;

  bool operator==(const Term &) const = default;
};

struct TermArchive {
  std::vector<Term> terms;

  // The "All terms (N)" counter.
  std::size_t total() const { return terms.size(); }

  const Term *find(std::string_view id) const;
  Term *find(std::string_view id);

  bool operator==(const TermArchive &) const = default;
};

// kind absent: every term. Archive order is preserved.
std::vector<Term> filter_terms(const TermArchive &archive, std::optional<TermKind> kind);

// Case-insensitive substring match over the space-joined lemmas.
std::vector<Term> search(const TermArchive &archive, std::string_view query);

// Full sentences referenced by the term, in corpus order. Throws
// okb::Error(kNotFound, "no such term").
std::vector<Sentence> sentences_of(const TermArchive &archive,
                                   std::span<const Document> documents,
                                   std::string_view term_id);

// Idempotent flag update. Throws okb::Error(kNotFound) for unknown ids.
TermArchive set_selected(TermArchive archive, std::string_view term_id, bool on);

std::vector<Term> selection(const TermArchive &archive);

// One space-joined lemma sequence per line.
std::string export_selection(const TermArchive &archive);

// TSV: lemmas<TAB>pattern<TAB>frequency<TAB>doc:sent,...
std::string export_archive(const TermArchive &archive);

// Resolves a term by id or, failing that, by exact label.
const Term *find_term(const TermArchive &archive, std::string_view id_or_label);

}  // namespace okb

#endif  // OKB_TERMSTORE_H_
