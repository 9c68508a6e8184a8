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

#include "okb/analyzer.h"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "okb/text.h"

namespace okb {

namespace {

constexpr std::array<std::string_view, 4> kLinkNames = {"OBJECTIVE", "POSSESSIVE",
                                                        "ATTRIBUTIVE", "HOMOGENEOUS"};

// Coordinating conjunctions that join homogeneous members. "а" only counts
// as part of "а також".
constexpr std::array<std::string_view, 4> kCoordinators = {"і", "й", "та", "и"};

constexpr std::size_t kObjectWindow = 3;

bool is_gen(const TaggedToken &t) {
  return t.features.grammatical_case && *t.features.grammatical_case == Case::kGen;
}

bool has_link(std::span<const DependencyLink> links, std::size_t head, std::size_t dependent,
              LinkType type) {
  return std::any_of(links.begin(), links.end(), [&](const DependencyLink &l) {
    return l.head == head && l.dependent == dependent && l.relation == type;
  });
}

bool is_comma(const TaggedToken &t) {
  return t.token.kind == TokenKind::kPunct && t.token.surface == ",";
}

// Length of the separator starting at `i` (0 when there is none).
std::size_t coordinator_length(std::span<const TaggedToken> tagged, std::size_t i) {
  if (i >= tagged.size() || tagged[i].token.kind != TokenKind::kWord) return 0;
  const std::string word = text::fold_case(tagged[i].token.surface);
  for (std::string_view c : kCoordinators) {
    if (word == c) return 1;
  }
  if (word == "а" && i + 1 < tagged.size() &&
      text::fold_case(tagged[i + 1].token.surface) == "також") {
    return 2;
  }
  return 0;
}

bool can_be_member(const TaggedToken &t) {
  if (t.token.kind != TokenKind::kWord || !t.pos) return false;
  switch (*t.pos) {
    case Pos::kConj:
    case Pos::kPrep:
    case Pos::kPart:
      return false;
    default:
      return true;
  }
}

bool coordinates_with(const TaggedToken &head, const TaggedToken &t) {
  if (!can_be_member(t) || *t.pos != *head.pos) return false;
  const auto &a = head.features.grammatical_case;
  const auto &b = t.features.grammatical_case;
  return !(a && b && *a != *b);
}

void add_link(std::vector<DependencyLink> &links, DependencyLink l) {
  if (l.head == l.dependent) return;
  if (has_link(links, l.head, l.dependent, l.relation)) return;
  links.push_back(l);
}

std::vector<std::string> normal_form(std::span<const TaggedToken> tagged,
                                     TermPattern pattern, std::size_t begin,
                                     const Lexicon &lexicon) {
  const std::size_t n = arity(pattern);
  const std::size_t head = begin + head_position(pattern);
  const TaggedToken &head_token = tagged[head];
  std::vector<std::string> words;
  words.reserve(n);
  for (std::size_t i = begin; i < begin + n; ++i) {
    const TaggedToken &t = tagged[i];
    if (i == head) {
      words.push_back(t.lemma);
    } else if (i < head) {
      // Adjective of the head noun: nominative form agreeing with it.
      Features wanted;
      wanted.grammatical_case = Case::kNom;
      if (head_token.features.gender) {
        wanted.number = Number::kSg;
        wanted.gender = head_token.features.gender;
      } else {
        wanted.number = head_token.features.number;
      }
      const LexEntry *form = lexicon.find_form(t.lemma, Pos::kAdj, wanted);
      words.push_back(form ? form->surface : t.lemma);
    } else {
      words.push_back(text::fold_case(t.token.surface));
    }
  }
  return words;
}

constexpr std::array<TermPattern, 6> kPatternsByArity = {
    TermPattern::kAdjNNgen, TermPattern::kNAdjN, TermPattern::kAdjN,
    TermPattern::kNNgen,    TermPattern::kN,     TermPattern::kAbbr,
};

}  // namespace

std::string_view to_string(LinkType type) { return kLinkNames[static_cast<std::size_t>(type)]; }

std::optional<LinkType> parse_link_type(std::string_view s) {
  for (std::size_t i = 0; i < kLinkNames.size(); ++i) {
    if (kLinkNames[i] == s) return static_cast<LinkType>(i);
  }
  return std::nullopt;
}

std::vector<TaggedToken> tag(const Sentence &sentence, const Lexicon &lexicon) {
  std::vector<TaggedToken> tagged;
  tagged.reserve(sentence.tokens.size());
  for (const Token &token : sentence.tokens) {
    TaggedToken t;
    t.token = token;
    if (token.kind != TokenKind::kWord) {
      t.lemma = token.surface;
      tagged.push_back(std::move(t));
      continue;
    }
    const auto &entries = lexicon.lookup(token.surface);
    if (entries.empty()) {
      Lemmatized fallback = lexicon.lemmatize(token.surface);
      t.lemma = std::move(fallback.lemma);
      t.pos = fallback.pos;
    } else {
      const LexEntry &first = entries.front();
      t.lemma = first.lemma;
      t.pos = first.pos;
      t.features = first.features;
      t.ambiguous = entries.size() > 1;
      t.case_ambiguous =
          std::any_of(entries.begin() + 1, entries.end(), [&](const LexEntry &e) {
            return e.features.grammatical_case != first.features.grammatical_case;
          });
    }
    tagged.push_back(std::move(t));
  }
  return tagged;
}

std::vector<DependencyLink> link(std::span<const TaggedToken> tagged) {
  std::vector<DependencyLink> links;
  const std::size_t n = tagged.size();

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (tagged[i].is(Pos::kAdj) && tagged[i + 1].is(Pos::kNoun) &&
        tagged[i].features.agrees_with(tagged[i + 1].features)) {
      add_link(links, {i + 1, i, LinkType::kAttributive});
    }
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!tagged[i].is(Pos::kNoun)) continue;
    std::size_t j = i + 1;
    while (j < n && tagged[j].is(Pos::kAdj)) ++j;
    if (j >= n || !tagged[j].is(Pos::kNoun) || !is_gen(tagged[j])) continue;
    bool agree = true;
    for (std::size_t k = i + 1; k < j; ++k) {
      agree = agree && tagged[k].features.agrees_with(tagged[j].features);
    }
    if (agree) add_link(links, {i, j, LinkType::kPossessive});
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!tagged[i].is(Pos::kVerb)) continue;
    for (std::size_t j = i + 1; j < n && j <= i + kObjectWindow; ++j) {
      if (tagged[j].is(Pos::kPrep) || tagged[j].is(Pos::kVerb)) break;
      if (!tagged[j].is(Pos::kNoun)) continue;
      const auto &c = tagged[j].features.grammatical_case;
      if (!c || *c == Case::kAcc || tagged[j].case_ambiguous) {
        add_link(links, {i, j, LinkType::kObjective});
      }
      break;
    }
  }

  std::size_t i = 0;
  while (i < n) {
    if (!can_be_member(tagged[i])) {
      ++i;
      continue;
    }
    std::vector<std::size_t> members = {i};
    std::size_t k = i + 1;
    while (true) {
      std::size_t separators = 0;
      while (k < n) {
        if (is_comma(tagged[k])) {
          ++k;
          ++separators;
        } else if (const std::size_t len = coordinator_length(tagged, k); len > 0) {
          k += len;
          ++separators;
        } else {
          break;
        }
      }
      if (separators == 0 || k >= n || !coordinates_with(tagged[i], tagged[k])) break;
      members.push_back(k);
      ++k;
    }
    for (std::size_t m = 1; m < members.size(); ++m) {
      add_link(links, {members.front(), members[m], LinkType::kHomogeneous});
    }
    i = members.size() > 1 ? members.back() + 1 : i + 1;
  }
  return links;
}

bool matches_pattern(std::span<const TaggedToken> tagged,
                     std::span<const DependencyLink> links, TermPattern pattern,
                     std::size_t begin) {
  const std::size_t n = arity(pattern);
  if (begin + n > tagged.size()) return false;
  auto at = [&](std::size_t offset) -> const TaggedToken & { return tagged[begin + offset]; };
  auto attributive = [&](std::size_t noun, std::size_t adj) {
    return has_link(links, begin + noun, begin + adj, LinkType::kAttributive);
  };
  auto possessive = [&](std::size_t head, std::size_t dep) {
    return has_link(links, begin + head, begin + dep, LinkType::kPossessive);
  };
  switch (pattern) {
    case TermPattern::kAbbr:
      return at(0).is(Pos::kAbbr);
    case TermPattern::kN:
      return at(0).is(Pos::kNoun);
    case TermPattern::kAdjN:
      return at(0).is(Pos::kAdj) && at(1).is(Pos::kNoun) && attributive(1, 0);
    case TermPattern::kNNgen:
      return at(0).is(Pos::kNoun) && at(1).is(Pos::kNoun) && is_gen(at(1)) &&
             possessive(0, 1);
    case TermPattern::kAdjNNgen:
      return at(0).is(Pos::kAdj) && at(1).is(Pos::kNoun) && at(2).is(Pos::kNoun) &&
             is_gen(at(2)) && attributive(1, 0) && possessive(1, 2);
    case TermPattern::kNAdjN:
      return at(0).is(Pos::kNoun) && at(1).is(Pos::kAdj) && at(2).is(Pos::kNoun) &&
             is_gen(at(2)) && attributive(2, 1) && possessive(0, 2);
  }
  return false;
}

std::vector<TermOccurrence> extract_terms(std::span<const TaggedToken> tagged,
                                          std::span<const DependencyLink> links,
                                          const Lexicon &lexicon, std::string_view doc_id,
                                          std::size_t sentence) {
  std::vector<TermOccurrence> out;
  auto emit = [&](TermPattern pattern, std::size_t begin, bool nested) {
    TermOccurrence occ;
    occ.pattern = pattern;
    occ.doc_id = std::string(doc_id);
    occ.sentence = sentence;
    occ.begin = begin;
    occ.end = begin + arity(pattern);
    occ.head = begin + head_position(pattern);
    occ.nested = nested;
    for (std::size_t i = occ.begin; i < occ.end; ++i) occ.lemmas.push_back(tagged[i].lemma);
    occ.normal_form = normal_form(tagged, pattern, begin, lexicon);
    out.push_back(std::move(occ));
  };

  std::size_t i = 0;
  while (i < tagged.size()) {
    const auto found = std::find_if(
        kPatternsByArity.begin(), kPatternsByArity.end(),
        [&](TermPattern p) { return matches_pattern(tagged, links, p, i); });
    if (found == kPatternsByArity.end()) {
      ++i;
      continue;
    }
    const std::size_t length = arity(*found);
    emit(*found, i, false);
    for (std::size_t start = i; start < i + length; ++start) {
      for (TermPattern p : kPatternsByArity) {
        const std::size_t sub = arity(p);
        if (sub >= length || start + sub > i + length) continue;
        if (matches_pattern(tagged, links, p, start)) emit(p, start, true);
      }
    }
    i += length;
  }
  return out;
}

SentenceAnalysis analyze_sentence(const Document &doc, const Sentence &sentence,
                                  const Lexicon &lexicon) {
  SentenceAnalysis result;
  result.doc_id = doc.id;
  result.sentence = sentence.index;
  result.tagged = tag(sentence, lexicon);
  result.links = link(result.tagged);
  result.occurrences =
      extract_terms(result.tagged, result.links, lexicon, doc.id, sentence.index);
  return result;
}

std::vector<SentenceAnalysis> analyze_corpus(std::span<const Document> documents,
                                             const Lexicon &lexicon) {
  std::vector<SentenceAnalysis> analyses;
  for (const Document &doc : documents) {
    for (const Sentence &sentence : doc.sentences) {
      analyses.push_back(analyze_sentence(doc, sentence, lexicon));
    }
  }
  return analyses;
}

TermArchive aggregate(std::span<const TermOccurrence> occurrences) {
  std::map<std::pair<std::vector<std::string>, TermKind>, std::size_t> index;
  std::vector<Term> terms;
  for (const TermOccurrence &occ : occurrences) {
    const TermKind kind = kind_of(occ.pattern);
    auto [it, inserted] = index.try_emplace({occ.lemmas, kind}, terms.size());
    if (inserted) {
      Term term;
      term.lemmas = occ.normal_form;
      term.key = occ.lemmas;
      term.pattern = occ.pattern;
      term.kind = kind;
      terms.push_back(std::move(term));
    }
    Term &term = terms[it->second];
    ++term.frequency;
    term.sentences.push_back({occ.doc_id, occ.sentence});
  }
  for (Term &term : terms) {
    std::sort(term.sentences.begin(), term.sentences.end());
    term.sentences.erase(std::unique(term.sentences.begin(), term.sentences.end()),
                         term.sentences.end());
  }
  std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    const std::string la = a.label(), lb = b.label();
    if (la != lb) return la < lb;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.key < b.key;
  });
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i].id = "t" + std::to_string(i + 1);
  return TermArchive{std::move(terms)};
}

TermArchive aggregate(std::span<const SentenceAnalysis> analyses) {
  std::vector<TermOccurrence> all;
  for (const SentenceAnalysis &a : analyses) {
    all.insert(all.end(), a.occurrences.begin(), a.occurrences.end());
  }
  return aggregate(all);
}

}  // namespace okb
