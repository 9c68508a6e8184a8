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

// Shared fixtures and reference implementations for the test suites. The
// reference functions deliberately avoid the library's own algorithms.

#ifndef OKB_TESTS_SUPPORT_H_
#define OKB_TESTS_SUPPORT_H_

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "okb/analyzer.h"
#include "okb/corpus.h"
#include "okb/lexicon.h"
#include "okb/ontology.h"
#include "okb/termstore.h"

namespace okb::testing {

std::string read_text(const std::string &path);
std::string data_file(const std::string &name);       // bundled data/
std::string test_data_file(const std::string &name);  // tests/data/

const Lexicon &fixture_lexicon();
const std::string &fixture_text();

// Fixture corpus, analyses and archive, computed once.
struct FixtureRun {
  std::vector<Document> documents;
  std::vector<SentenceAnalysis> analyses;
  TermArchive archive;
};
const FixtureRun &fixture_run();

const Term *term_by_label(const TermArchive &archive, const std::string &label);
std::vector<std::size_t> sentence_numbers(const Term &term);  // 1-based

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  TermPattern pattern = TermPattern::kN;
  bool nested = false;

  auto operator<=>(const Span &) const = default;
};

// Every licensed pattern instance, then a left-to-right longest-first cover
// plus the strictly shorter instances inside each cover span.
std::vector<Span> reference_spans(std::span<const TaggedToken> tagged,
                                  std::span<const DependencyLink> links);

// Transitive closure over IS_A edges; true when some concept reaches itself.
bool reference_has_is_a_cycle(const OntologyGraph &graph);

// Label-, type- and name-preserving isomorphism found by backtracking over
// concept bijections. Ids and element order are ignored.
bool isomorphic(const OntologyGraph &a, const OntologyGraph &b);

// Valid graph with ids c<N>/r<N> in shuffled numbering, labels drawn from a
// pool that includes markup characters, whitespace and duplicates.
OntologyGraph random_graph(std::mt19937 &rng, std::size_t max_concepts);

// Random single-sentence documents over the fixture vocabulary.
std::vector<Document> random_corpus(std::mt19937 &rng, std::size_t documents);

}  // namespace okb::testing

#endif  // OKB_TESTS_SUPPORT_H_
