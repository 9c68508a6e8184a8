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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "okb/analyzer.h"
#include "support.h"

namespace okb {
namespace {

using testing::fixture_lexicon;
using testing::fixture_run;

std::vector<TaggedToken> tag_text(std::string_view text) {
  const Document doc = ingest_document(text, "t", "d1");
  return tag(doc.sentences.at(0), fixture_lexicon());
}

const SentenceAnalysis &fixture_sentence(std::size_t number) {
  return fixture_run().analyses.at(number - 1);
}

std::size_t find_token(const SentenceAnalysis &a, std::string_view surface) {
  for (std::size_t i = 0; i < a.tagged.size(); ++i) {
    if (a.tagged[i].token.surface == surface) return i;
  }
  ADD_FAILURE() << "no token " << surface;
  return 0;
}

bool has_occurrence(const SentenceAnalysis &a, TermPattern pattern,
                    const std::vector<std::string> &lemmas, bool nested) {
  return std::any_of(a.occurrences.begin(), a.occurrences.end(), [&](const TermOccurrence &o) {
    return o.pattern == pattern && o.lemmas == lemmas && o.nested == nested;
  });
}

TEST(Tag, AdjectiveNounPair) {
  const auto tagged = tag_text("обчислювальної системи");
  ASSERT_EQ(tagged.size(), 2u);
  EXPECT_EQ(tagged[0].lemma, "обчислювальний");
  EXPECT_TRUE(tagged[0].is(Pos::kAdj));
  EXPECT_EQ(tagged[0].features.grammatical_case, Case::kGen);
  EXPECT_EQ(tagged[1].lemma, "система");
  EXPECT_TRUE(tagged[1].is(Pos::kNoun));
  EXPECT_EQ(tagged[1].features.grammatical_case, Case::kGen);
}

TEST(Tag, AbbreviationFallbackAndPunctuation) {
  const auto tagged = tag_text("ПК, 2009.");
  ASSERT_EQ(tagged.size(), 4u);
  EXPECT_TRUE(tagged[0].is(Pos::kAbbr));
  EXPECT_FALSE(tagged[1].pos.has_value());
  EXPECT_FALSE(tagged[2].pos.has_value());
  EXPECT_FALSE(tagged[3].pos.has_value());
}

TEST(Tag, AmbiguityFlags) {
  const auto plain = tag_text("обчислювальної");
  EXPECT_FALSE(plain[0].ambiguous);
  const auto amb = tag_text("системи");
  EXPECT_TRUE(amb[0].ambiguous);
  EXPECT_TRUE(amb[0].case_ambiguous);
  EXPECT_EQ(amb[0].features.grammatical_case, Case::kGen);  // first entry wins
}

TEST(Link, FixtureSentenceOne) {
  const SentenceAnalysis &s1 = fixture_sentence(1);
  const std::vector<DependencyLink> expected = {{2, 1, LinkType::kAttributive},
                                                {0, 2, LinkType::kPossessive}};
  std::vector<DependencyLink> got = s1.links;
  std::sort(got.begin(), got.end());
  std::vector<DependencyLink> want = expected;
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
}

TEST(Link, FixtureSentenceSixHomogeneousGroup) {
  const SentenceAnalysis &s6 = fixture_sentence(6);
  const std::size_t head = find_token(s6, "накопичення");
  std::vector<std::string> members;
  std::size_t homogeneous = 0;
  for (const DependencyLink &l : s6.links) {
    if (l.relation != LinkType::kHomogeneous) continue;
    ++homogeneous;
    EXPECT_EQ(l.head, head);
    members.push_back(s6.tagged[l.dependent].token.surface);
  }
  EXPECT_EQ(homogeneous, 4u);
  EXPECT_EQ(members, (std::vector<std::string>{"збереження", "опрацювання", "передачі",
                                               "відтворення"}));
}

TEST(Link, SingleTokenSentenceHasNoLinks) {
  EXPECT_TRUE(link(tag_text("Система.")).empty());
  EXPECT_TRUE(link(tag_text("конфігурацією")).empty());
}

TEST(Link, AttributiveRequiresAgreement) {
  // Feminine genitive adjective before a nominative plural noun.
  const auto tagged = tag_text("обчислювальної стани");
  for (const DependencyLink &l : link(tagged)) EXPECT_NE(l.relation, LinkType::kAttributive);
}

TEST(Link, HomogeneousNeedsSameCaseAndSeparator) {
  const auto tagged = tag_text("накопичення збереження");
  for (const DependencyLink &l : link(tagged)) EXPECT_NE(l.relation, LinkType::kHomogeneous);
}

TEST(Extract, FixtureExamples) {
  EXPECT_TRUE(has_occurrence(fixture_sentence(2), TermPattern::kAdjN,
                             {"механічний", "пристрій"}, false));
  EXPECT_TRUE(has_occurrence(fixture_sentence(2), TermPattern::kN, {"пристрій"}, true));
  EXPECT_TRUE(has_occurrence(fixture_sentence(3), TermPattern::kAdjNNgen,
                             {"двійковий", "система", "числення"}, false));
  EXPECT_TRUE(has_occurrence(fixture_sentence(7), TermPattern::kN, {"конфігурація"}, false));
}

TEST(Extract, NormalFormAgreesWithHead) {
  for (const TermOccurrence &o : fixture_sentence(1).occurrences) {
    if (o.pattern == TermPattern::kAdjN) {
      EXPECT_EQ(o.normal_form, (std::vector<std::string>{"обчислювальна", "система"}));
    }
    if (o.pattern == TermPattern::kNAdjN || o.pattern == TermPattern::kNNgen) {
      EXPECT_EQ(o.normal_form.front(), "склад");
    }
  }
}

TEST(Extract, MatchesReferenceOnFixture) {
  for (const SentenceAnalysis &a : fixture_run().analyses) {
    std::vector<testing::Span> got;
    for (const TermOccurrence &o : a.occurrences) got.push_back({o.begin, o.end, o.pattern, o.nested});
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, testing::reference_spans(a.tagged, a.links)) << "sentence " << a.sentence;
  }
}

// Random sentences over the fixture vocabulary, up to 12 tokens, against the
// brute-force enumeration of licensed spans.
TEST(ExtractProperty, MatchesReferenceOnRandomSentences) {
  std::mt19937 rng(2026);
  for (const Document &doc : testing::random_corpus(rng, 400)) {
    for (const Sentence &s : doc.sentences) {
      const SentenceAnalysis a = analyze_sentence(doc, s, fixture_lexicon());
      std::vector<testing::Span> got;
      for (const TermOccurrence &o : a.occurrences) {
        got.push_back({o.begin, o.end, o.pattern, o.nested});
        ASSERT_LE(o.end, a.tagged.size());
        EXPECT_EQ(o.lemmas.size(), arity(o.pattern));
        EXPECT_TRUE(matches_pattern(a.tagged, a.links, o.pattern, o.begin));
      }
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, testing::reference_spans(a.tagged, a.links)) << s.text;
    }
  }
}

TEST(ExtractProperty, MultiwordOccurrencesCarryTheirLinks) {
  std::mt19937 rng(7);
  for (const Document &doc : testing::random_corpus(rng, 300)) {
    const SentenceAnalysis a = analyze_sentence(doc, doc.sentences[0], fixture_lexicon());
    auto has = [&](std::size_t h, std::size_t d, LinkType t) {
      return std::find(a.links.begin(), a.links.end(), DependencyLink{h, d, t}) != a.links.end();
    };
    for (const TermOccurrence &o : a.occurrences) {
      const std::size_t b = o.begin;
      switch (o.pattern) {
        case TermPattern::kAdjN:
          EXPECT_TRUE(has(b + 1, b, LinkType::kAttributive));
          break;
        case TermPattern::kNNgen:
          EXPECT_TRUE(has(b, b + 1, LinkType::kPossessive));
          break;
        case TermPattern::kAdjNNgen:
          EXPECT_TRUE(has(b + 1, b, LinkType::kAttributive));
          EXPECT_TRUE(has(b + 1, b + 2, LinkType::kPossessive));
          break;
        case TermPattern::kNAdjN:
          EXPECT_TRUE(has(b + 2, b + 1, LinkType::kAttributive));
          EXPECT_TRUE(has(b, b + 2, LinkType::kPossessive));
          break;
        default:
          break;
      }
    }
  }
}

TEST(Aggregate, FixtureFrequencies) {
  const TermArchive &archive = fixture_run().archive;
  const Term *os = testing::term_by_label(archive, "обчислювальна система");
  ASSERT_NE(os, nullptr);
  EXPECT_EQ(os->frequency, 3u);
  EXPECT_EQ(testing::sentence_numbers(*os), (std::vector<std::size_t>{1, 5, 7}));
  const Term *auto_ = testing::term_by_label(archive, "автоматизація");
  ASSERT_NE(auto_, nullptr);
  EXPECT_EQ(auto_->frequency, 2u);
  EXPECT_EQ(testing::sentence_numbers(*auto_), (std::vector<std::size_t>{4, 6}));
  const Term *mp = testing::term_by_label(archive, "механічний пристрій");
  ASSERT_NE(mp, nullptr);
  EXPECT_EQ(mp->frequency, 1u);
}

TEST(Aggregate, EmptyCorpus) {
  EXPECT_EQ(aggregate(std::span<const TermOccurrence>()).total(), 0u);
}

TEST(Aggregate, OrderingAndIds) {
  const TermArchive &archive = fixture_run().archive;
  for (std::size_t i = 0; i < archive.terms.size(); ++i) {
    EXPECT_EQ(archive.terms[i].id, "t" + std::to_string(i + 1));
    if (i > 0) {
      const Term &a = archive.terms[i - 1], &b = archive.terms[i];
      EXPECT_TRUE(a.frequency > b.frequency ||
                  (a.frequency == b.frequency && a.label() <= b.label()));
    }
  }
}

// Counting by hand from the occurrence list must agree with the archive.
TEST(AggregateProperty, FrequenciesMatchOccurrenceCounts) {
  std::mt19937 rng(99);
  const auto docs = testing::random_corpus(rng, 200);
  const auto analyses = analyze_corpus(docs, fixture_lexicon());
  const TermArchive archive = aggregate(std::span<const SentenceAnalysis>(analyses));
  std::map<std::pair<std::vector<std::string>, TermKind>, std::size_t> counts;
  for (const SentenceAnalysis &a : analyses) {
    for (const TermOccurrence &o : a.occurrences) ++counts[{o.lemmas, kind_of(o.pattern)}];
  }
  ASSERT_EQ(counts.size(), archive.total());
  for (const Term &t : archive.terms) EXPECT_EQ(t.frequency, (counts[{t.key, t.kind}]));
}

// freq(single noun) >= number of noun positions with that lemma inside
// maximal multiword occurrences.
TEST(AggregateProperty, NestedCountInvariant) {
  std::mt19937 rng(4242);
  for (int round = 0; round < 30; ++round) {
    const auto docs = testing::random_corpus(rng, 60);
    const auto analyses = analyze_corpus(docs, fixture_lexicon());
    const TermArchive archive = aggregate(std::span<const SentenceAnalysis>(analyses));
    std::map<std::string, std::size_t> inside;
    for (const SentenceAnalysis &a : analyses) {
      for (const TermOccurrence &o : a.occurrences) {
        if (o.nested || kind_of(o.pattern) != TermKind::kMulti) continue;
        for (std::size_t i = o.begin; i < o.end; ++i) {
          if (a.tagged[i].is(Pos::kNoun)) ++inside[a.tagged[i].lemma];
        }
      }
    }
    for (const auto &[lemma, count] : inside) {
      std::size_t freq = 0;
      for (const Term &t : archive.terms) {
        if (t.kind == TermKind::kSingle && t.key == std::vector<std::string>{lemma}) freq = t.frequency;
      }
      EXPECT_GE(freq, count) << lemma;
    }
  }
}

}  // namespace
}  // namespace okb
