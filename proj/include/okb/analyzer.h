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

#ifndef OKB_ANALYZER_H_
#define OKB_ANALYZER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "okb/corpus.h"
#include "okb/lexicon.h"
#include "okb/termstore.h"

namespace okb {

struct TaggedToken {
  Token token;
  std::string lemma;
  std::optional<Pos> pos;  // absent for PUNCT and NUM tokens
  Features features;
  bool ambiguous = false;       // more than one dictionary entry
  bool case_ambiguous = false;  // entries disagree on case

  bool is(Pos p) const { return pos && *pos == p; }

  bool operator==(const TaggedToken &) const = default;
};

enum class LinkType { kObjective, kPossessive, kAttributive, kHomogeneous };

std::string_view to_string(LinkType type);
std::optional<LinkType> parse_link_type(std::string_view s);

// Token indices refer to the sentence's token list.
struct DependencyLink {
  std::size_t head = 0;
  std::size_t dependent = 0;
  LinkType relation = LinkType::kAttributive;

  auto operator<=>(const DependencyLink &) const = default;
};

struct TermOccurrence {
  std::vector<std::string> lemmas;  // citation forms, one per token
  std::vector<std::string> normal_form;
  TermPattern pattern = TermPattern::kN;
  std::string doc_id;
  std::size_t sentence = 0;
  std::size_t begin = 0;  // token range [begin, end)
  std::size_t end = 0;
  std::size_t head = 0;  // token index of the head noun
  bool nested = false;   // sub-match of a longer maximal match

  bool operator==(const TermOccurrence &) const = default;
};

std::vector<TaggedToken> tag(const Sentence &sentence, const Lexicon &lexicon);

// Flat typed-link grammar:
//  ATTRIBUTIVE  ADJ directly before an agreeing NOUN (head = noun).
//  POSSESSIVE   NOUN, then agreeing ADJs, then a genitive NOUN.
//  OBJECTIVE    VERB and the first NOUN within 3 tokens if accusative or
//               case-ambiguous; PREP or VERB in between blocks it.
//  HOMOGENEOUS  same-POS, same-case words separated only by commas and
//               coordinating conjunctions; first member heads the group.
std::vector<DependencyLink> link(std::span<const TaggedToken> tagged);

// True when `tokens[begin, begin + arity)` matches `pattern` and the
// licensing links exist.
bool matches_pattern(std::span<const TaggedToken> tagged,
                     std::span<const DependencyLink> links, TermPattern pattern,
                     std::size_t begin);

// Leftmost-longest scan over the pattern set. Each maximal multiword match is
// followed by every licensed pattern match strictly inside it (flagged
// `nested`), nouns included. `doc_id` and `sentence` are copied into each
// occurrence; the lexicon supplies agreeing adjective forms.
std::vector<TermOccurrence> extract_terms(std::span<const TaggedToken> tagged,
                                          std::span<const DependencyLink> links,
                                          const Lexicon &lexicon,
                                          std::string_view doc_id = {},
                                          std::size_t sentence = 0);

struct SentenceAnalysis {
  std::string doc_id;
  std::size_t sentence = 0;
  std::vector<TaggedToken> tagged;
  std::vector<DependencyLink> links;
  std::vector<TermOccurrence> occurrences;

  bool operator==(const SentenceAnalysis &) const = default;
};

SentenceAnalysis analyze_sentence(const Document &doc, const Sentence &sentence,
                                  const Lexicon &lexicon);
std::vector<SentenceAnalysis> analyze_corpus(std::span<const Document> documents,
                                             const Lexicon &lexicon);

// Groups occurrences by (citation lemmas, kind). Ordering: frequency
// descending, then label, then kind. Ids are "t1", "t2", ... in that order.
TermArchive aggregate(std::span<const TermOccurrence> occurrences);
TermArchive aggregate(std::span<const SentenceAnalysis> analyses);

}  // namespace okb

#endif  // OKB_ANALYZER_H_
