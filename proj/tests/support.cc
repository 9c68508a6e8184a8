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

#include "support.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace okb::testing {

std::string read_text(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string data_file(const std::string &name) { return std::string(OKB_DATA_DIR) + "/" + name; }

std::string test_data_file(const std::string &name) {
  return std::string(OKB_TEST_DATA_DIR) + "/" + name;
}

const Lexicon &fixture_lexicon() {
  static const Lexicon lexicon =
      load_lexicon_text(read_text(data_file("uk_mini.tsv")), "uk_mini.tsv").lexicon;
  return lexicon;
}

const std::string &fixture_text() {
  static const std::string text = read_text(data_file("uk_fragment.txt"));
  return text;
}

const FixtureRun &fixture_run() {
  static const FixtureRun run = [] {
    FixtureRun r;
    r.documents.push_back(ingest_document(fixture_text(), "uk_fragment.txt", "d1"));
    r.analyses = analyze_corpus(r.documents, fixture_lexicon());
    r.archive = aggregate(std::span<const SentenceAnalysis>(r.analyses));
    return r;
  }();
  return run;
}

const Term *term_by_label(const TermArchive &archive, const std::string &label) {
  for (const Term &t : archive.terms) {
    if (t.label() == label) return &t;
  }
  return nullptr;
}

std::vector<std::size_t> sentence_numbers(const Term &term) {
  std::vector<std::size_t> out;
  for (const SentenceRef &ref : term.sentences) out.push_back(ref.sentence + 1);
  return out;
}

namespace {

struct Shape {
  TermPattern pattern;
  std::vector<Pos> pos;
  int genitive;  // position that must be genitive, or -1
  // (head, dependent, type) relative to the start
  std::vector<std::tuple<std::size_t, std::size_t, LinkType>> links;
};

const std::vector<Shape> &shapes() {
  static const std::vector<Shape> table = {
      {TermPattern::kAbbr, {Pos::kAbbr}, -1, {}},
      {TermPattern::kN, {Pos::kNoun}, -1, {}},
      {TermPattern::kAdjN, {Pos::kAdj, Pos::kNoun}, -1, {{1, 0, LinkType::kAttributive}}},
      {TermPattern::kNNgen, {Pos::kNoun, Pos::kNoun}, 1, {{0, 1, LinkType::kPossessive}}},
      {TermPattern::kAdjNNgen,
       {Pos::kAdj, Pos::kNoun, Pos::kNoun},
       2,
       {{1, 0, LinkType::kAttributive}, {1, 2, LinkType::kPossessive}}},
      {TermPattern::kNAdjN,
       {Pos::kNoun, Pos::kAdj, Pos::kNoun},
       2,
       {{2, 1, LinkType::kAttributive}, {0, 2, LinkType::kPossessive}}},
  };
  return table;
}

}  // namespace

std::vector<Span> reference_spans(std::span<const TaggedToken> tagged,
                                  std::span<const DependencyLink> links) {
  std::set<std::tuple<std::size_t, std::size_t, LinkType>> present;
  for (const DependencyLink &l : links) present.insert({l.head, l.dependent, l.relation});

  std::vector<Span> licensed;
  for (std::size_t b = 0; b < tagged.size(); ++b) {
    for (const Shape &s : shapes()) {
      const std::size_t n = s.pos.size();
      if (b + n > tagged.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        ok = tagged[b + k].pos.has_value() && *tagged[b + k].pos == s.pos[k];
      }
      if (ok && s.genitive >= 0) {
        const auto &c = tagged[b + s.genitive].features.grammatical_case;
        ok = c.has_value() && *c == Case::kGen;
      }
      for (const auto &[h, d, t] : s.links) {
        if (ok) ok = present.count({b + h, b + d, t}) > 0;
      }
      if (ok) licensed.push_back({b, b + n, s.pattern, false});
    }
  }

  std::vector<Span> out;
  std::size_t pos = 0;
  while (pos < tagged.size()) {
    const Span *best = nullptr;
    for (const Span &s : licensed) {
      if (s.begin == pos && (best == nullptr || s.end > best->end)) best = &s;
    }
    if (best == nullptr) {
      ++pos;
      continue;
    }
    out.push_back(*best);
    for (const Span &s : licensed) {
      if (s.begin >= best->begin && s.end <= best->end && s.end - s.begin < best->end - best->begin) {
        Span inner = s;
        inner.nested = true;
        out.push_back(inner);
      }
    }
    pos = best->end;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool reference_has_is_a_cycle(const OntologyGraph &graph) {
  std::map<std::string, std::size_t> index;
  for (const Concept &c : graph.concepts) index.emplace(c.id, index.size());
  const std::size_t n = index.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const Relation &r : graph.relations) {
    if (r.type != RelationType::kIsA) continue;
    auto f = index.find(r.from), t = index.find(r.to);
    if (f != index.end() && t != index.end()) reach[f->second][t->second] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (reach[i][i]) return true;
  }
  return false;
}

namespace {

using Triple = std::tuple<RelationType, std::size_t, std::size_t>;

struct IsoState {
  const OntologyGraph &a;
  const OntologyGraph &b;
  std::set<Triple> b_edges;
  std::vector<std::vector<Triple>> a_edges_of;  // edges of a incident to each concept
  std::vector<std::size_t> map;                 // a index -> b index
  std::vector<bool> used;
  std::vector<std::string> a_sig, b_sig;

  bool extend(std::size_t i) {
    if (i == a.concepts.size()) return true;
    for (std::size_t j = 0; j < b.concepts.size(); ++j) {
      if (used[j] || a_sig[i] != b_sig[j]) continue;
      map[i] = j;
      bool ok = true;
      for (const auto &[type, from, to] : a_edges_of[i]) {
        const std::size_t other = from == i ? to : from;
        if (other > i) continue;  // checked when `other` is mapped
        if (!b_edges.count({type, map[from], map[to]})) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[j] = true;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  }
};

std::vector<std::string> signatures(const OntologyGraph &g) {
  std::map<std::string, std::size_t> index;
  for (const Concept &c : g.concepts) index.emplace(c.id, index.size());
  std::vector<std::vector<std::string>> parts(g.concepts.size());
  for (const Relation &r : g.relations) {
    const std::string t(to_string(r.type));
    parts[index.at(r.from)].push_back("out:" + t);
    parts[index.at(r.to)].push_back("in:" + t);
  }
  std::vector<std::string> sig;
  for (std::size_t i = 0; i < g.concepts.size(); ++i) {
    std::sort(parts[i].begin(), parts[i].end());
    std::string s = g.concepts[i].label;
    for (const std::string &p : parts[i]) s += '\x1f' + p;
    sig.push_back(std::move(s));
  }
  return sig;
}

}  // namespace

bool isomorphic(const OntologyGraph &a, const OntologyGraph &b) {
  if (a.name != b.name || a.concepts.size() != b.concepts.size() ||
      a.relations.size() != b.relations.size()) {
    return false;
  }
  std::map<std::string, std::size_t> ai, bi;
  for (const Concept &c : a.concepts) ai.emplace(c.id, ai.size());
  for (const Concept &c : b.concepts) bi.emplace(c.id, bi.size());
  if (ai.size() != a.concepts.size() || bi.size() != b.concepts.size()) return false;

  IsoState st{a, b, {}, std::vector<std::vector<Triple>>(a.concepts.size()),
              std::vector<std::size_t>(a.concepts.size()),
              std::vector<bool>(b.concepts.size(), false), signatures(a), signatures(b)};
  for (const Relation &r : b.relations) {
    if (!bi.count(r.from) || !bi.count(r.to)) return false;
    st.b_edges.insert({r.type, bi.at(r.from), bi.at(r.to)});
  }
  std::set<Triple> a_edges;
  for (const Relation &r : a.relations) {
    if (!ai.count(r.from) || !ai.count(r.to)) return false;
    const Triple t{r.type, ai.at(r.from), ai.at(r.to)};
    a_edges.insert(t);
    st.a_edges_of[ai.at(r.from)].push_back(t);
    if (r.from != r.to) st.a_edges_of[ai.at(r.to)].push_back(t);
  }
  if (a_edges.size() != st.b_edges.size()) return false;
  std::vector<std::string> sa = st.a_sig, sb = st.b_sig;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return st.extend(0);
}

OntologyGraph random_graph(std::mt19937 &rng, std::size_t max_concepts) {
  static const std::vector<std::string> kLabels = {
      "система",  "пристрій", "обчислювальна система", "комп'ютер", "a & b",  "<tag>",
      "\"quoted\"", "it's",   "  spaced  ",            "tab\there", "line\nbreak", "ПК",
      "x",         "x",        "дані",                  "ґанок",     "]]>",     "&amp;"};
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  OntologyGraph g;
  g.name = pick(4) == 0 ? std::string() : "g" + std::to_string(pick(1000));
  const std::size_t n = 1 + pick(max_concepts);

  std::vector<std::size_t> numbers(3 * n);
  for (std::size_t i = 0; i < numbers.size(); ++i) numbers[i] = i + 1;
  std::shuffle(numbers.begin(), numbers.end(), rng);
  for (std::size_t i = 0; i < n; ++i) {
    std::string label = kLabels[pick(kLabels.size())];
    if (pick(3) == 0) label += " " + std::to_string(pick(5));
    g.concepts.push_back({"c" + std::to_string(numbers[i]), label,
                          pick(2) ? ConceptSource::kManual : ConceptSource::kExtracted});
  }

  // IS_A only goes down a random rank order, which keeps it acyclic.
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = i;
  std::shuffle(rank.begin(), rank.end(), rng);

  std::set<std::tuple<RelationType, std::size_t, std::size_t>> seen;
  std::vector<std::size_t> rel_numbers(4 * n + 4);
  for (std::size_t i = 0; i < rel_numbers.size(); ++i) rel_numbers[i] = i + 1;
  std::shuffle(rel_numbers.begin(), rel_numbers.end(), rng);
  const std::size_t attempts = n < 2 ? 0 : pick(2 * n + 1);
  for (std::size_t k = 0; k < attempts; ++k) {
    const std::size_t from = pick(n), to = pick(n);
    if (from == to) continue;
    const auto type = static_cast<RelationType>(pick(5));
    if (type == RelationType::kIsA && rank[from] <= rank[to]) continue;
    if (!seen.insert({type, from, to}).second) continue;
    g.relations.push_back({"r" + std::to_string(rel_numbers[g.relations.size()]), type,
                           g.concepts[from].id, g.concepts[to].id});
  }
  return g;
}

std::vector<Document> random_corpus(std::mt19937 &rng, std::size_t documents) {
  static const std::vector<std::string> vocabulary = [] {
    std::vector<std::string> words;
    for (const LexEntry &e : fixture_lexicon().entries()) words.push_back(e.surface);
    words.insert(words.end(), {",", ",", "невідоме", "ПК", "ЕОМ", "42"});
    return words;
  }();
  std::uniform_int_distribution<std::size_t> word(0, vocabulary.size() - 1);
  std::uniform_int_distribution<std::size_t> length(1, 12);
  std::vector<Document> out;
  for (std::size_t d = 0; d < documents; ++d) {
    std::string text;
    const std::size_t n = length(rng);
    for (std::size_t k = 0; k < n; ++k) {
      const std::string &w = vocabulary[word(rng)];
      if (!text.empty() && w != ",") text += ' ';
      text += w;
    }
    text += '.';
    if (text.front() == ',') text.insert(0, "так");
    out.push_back(ingest_document(text, "r" + std::to_string(d), "d" + std::to_string(d + 1)));
  }
  return out;
}

}  // namespace okb::testing
