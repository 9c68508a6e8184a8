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
#include <random>

#include "okb/error.h"
#include "okb/ontology.h"
#include "support.h"

namespace okb {
namespace {

using testing::fixture_run;

OntologyGraph graph_of(std::vector<Concept> concepts, std::vector<Relation> relations) {
  OntologyGraph g;
  g.name = "g";
  g.concepts = std::move(concepts);
  g.relations = std::move(relations);
  return g;
}

std::vector<Term> pick_terms(const std::vector<std::string> &labels) {
  std::vector<Term> out;
  for (const std::string &l : labels) {
    const Term *t = testing::term_by_label(fixture_run().archive, l);
    if (t == nullptr) throw std::runtime_error("missing fixture term " + l);
    out.push_back(*t);
    out.back().selected = true;
  }
  return out;
}

const Concept *concept_labelled(const OntologyGraph &g, const std::string &label) {
  for (const Concept &c : g.concepts) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

bool has_relation(const OntologyGraph &g, RelationType type, const std::string &from_label,
                  const std::string &to_label) {
  const Concept *f = concept_labelled(g, from_label), *t = concept_labelled(g, to_label);
  if (!f || !t) return false;
  return std::any_of(g.relations.begin(), g.relations.end(), [&](const Relation &r) {
    return r.type == type && r.from == f->id && r.to == t->id;
  });
}

TEST(BuildDraft, HeadNounIsA) {
  const auto g = build_draft(pick_terms({"система", "обчислювальна система"}),
                             fixture_run().analyses, "demo");
  EXPECT_EQ(g.name, "demo");
  ASSERT_EQ(g.concepts.size(), 2u);
  EXPECT_EQ(g.concepts[0].id, "c1");
  EXPECT_EQ(g.concepts[0].source, ConceptSource::kExtracted);
  EXPECT_TRUE(has_relation(g, RelationType::kIsA, "обчислювальна система", "система"));
  EXPECT_EQ(std::count_if(g.relations.begin(), g.relations.end(),
                          [](const Relation &r) { return r.type == RelationType::kIsA; }),
            1);
  EXPECT_TRUE(validate(g).empty());
}

TEST(BuildDraft, PossessiveBecomesPartOf) {
  const auto g = build_draft(pick_terms({"склад", "обчислювальна система"}),
                             fixture_run().analyses, "demo");
  EXPECT_TRUE(has_relation(g, RelationType::kPartOf, "склад", "обчислювальна система"));
}

TEST(BuildDraft, SingleTermHasNoRelations) {
  const auto g = build_draft(pick_terms({"конфігурація"}), fixture_run().analyses, "demo");
  EXPECT_EQ(g.concepts.size(), 1u);
  EXPECT_TRUE(g.relations.empty());
}

TEST(BuildDraft, EmptySelectionFails) {
  try {
    build_draft({}, fixture_run().analyses, "demo");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(std::string(e.what()), "nothing selected");
  }
}

TEST(BuildDraftProperty, RandomSelectionsAreValid) {
  std::mt19937 rng(11);
  const auto &terms = fixture_run().archive.terms;
  for (int round = 0; round < 200; ++round) {
    std::vector<Term> chosen;
    for (const Term &t : terms) {
      if (rng() % 4 == 0) chosen.push_back(t);
    }
    if (chosen.empty()) chosen.push_back(terms[rng() % terms.size()]);
    const auto g = build_draft(chosen, fixture_run().analyses, "p");
    EXPECT_EQ(g.concepts.size(), chosen.size());
    EXPECT_TRUE(validate(g).empty());
    for (std::size_t i = 0; i < chosen.size(); ++i) EXPECT_EQ(g.concepts[i].label, chosen[i].label());
    for (const Relation &r : g.relations) {
      EXPECT_NE(g.find_concept(r.from), nullptr);
      EXPECT_NE(g.find_concept(r.to), nullptr);
      if (r.type == RelationType::kAssociated) {
        EXPECT_LE(g.find_concept(r.from)->label, g.find_concept(r.to)->label);
      }
    }
  }
}

TEST(Validate, ReportsCycleOnce) {
  const auto g = graph_of({{"a", "A"}, {"b", "B"}, {"c", "C"}},
                          {{"r1", RelationType::kIsA, "a", "b"},
                           {"r2", RelationType::kIsA, "b", "a"},
                           {"r3", RelationType::kIsA, "c", "a"}});
  const auto report = validate(g);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_EQ(report[0].kind, Violation::Kind::kIsACycle);
  EXPECT_EQ(report[0].ids, (std::vector<std::string>{"a", "b"}));
  EXPECT_FALSE(is_a_acyclic(g));
}

TEST(Validate, NonTaxonomicCyclesAreFine) {
  const auto g = graph_of({{"a", "A"}, {"b", "B"}}, {{"r1", RelationType::kPartOf, "a", "b"},
                                                     {"r2", RelationType::kPartOf, "b", "a"}});
  EXPECT_TRUE(validate(g).empty());
}

TEST(Validate, StructuralViolations) {
  auto kinds = [](const OntologyGraph &g) {
    std::vector<Violation::Kind> out;
    for (const Violation &v : validate(g)) out.push_back(v.kind);
    return out;
  };
  using K = Violation::Kind;
  EXPECT_EQ(kinds(graph_of({{"a", "A"}}, {{"r1", RelationType::kObject, "a", "zz"}})),
            std::vector<K>{K::kDanglingEndpoint});
  EXPECT_EQ(kinds(graph_of({{"a", "A"}, {"a", "B"}}, {})), std::vector<K>{K::kDuplicateConceptId});
  EXPECT_EQ(kinds(graph_of({{"a", ""}}, {})), std::vector<K>{K::kEmptyLabel});
  EXPECT_EQ(kinds(graph_of({{"a", "A"}}, {{"r1", RelationType::kObject, "a", "a"}})),
            std::vector<K>{K::kSelfLoop});
  EXPECT_EQ(kinds(graph_of({{"a", "A"}, {"b", "B"}}, {{"r1", RelationType::kObject, "a", "b"},
                                                      {"r2", RelationType::kObject, "a", "b"}})),
            std::vector<K>{K::kDuplicateRelation});
  EXPECT_EQ(kinds(graph_of({{"a", "A"}, {"b", "B"}}, {{"r1", RelationType::kObject, "a", "b"},
                                                      {"r1", RelationType::kPartOf, "a", "b"}})),
            std::vector<K>{K::kDuplicateRelationId});
}

TEST(ApplyEdit, AddConceptAndIsA) {
  OntologyGraph g;
  g = apply_edit(g, edit::AddConcept{"електронний пристрій", std::nullopt, ConceptSource::kManual});
  g = apply_edit(g, edit::AddConcept{"комп'ютер", std::nullopt, ConceptSource::kManual});
  ASSERT_EQ(g.concepts.size(), 2u);
  g = apply_edit(g, edit::AddRelation{RelationType::kIsA, g.concepts[1].id, g.concepts[0].id,
                                      std::nullopt});
  EXPECT_TRUE(has_relation(g, RelationType::kIsA, "комп'ютер", "електронний пристрій"));
  EXPECT_TRUE(validate(g).empty());
}

TEST(ApplyEdit, RemoveConceptDropsIncidentEdges) {
  const auto g = graph_of({{"c1", "A"}, {"c2", "B"}, {"c3", "C"}},
                          {{"r1", RelationType::kIsA, "c1", "c2"},
                           {"r2", RelationType::kObject, "c3", "c2"},
                           {"r3", RelationType::kObject, "c1", "c3"}});
  const auto after = apply_edit(g, edit::RemoveConcept{"c2"});
  EXPECT_EQ(after.concepts.size(), 2u);
  ASSERT_EQ(after.relations.size(), 1u);
  EXPECT_EQ(after.relations[0].id, "r3");
}

TEST(ApplyEdit, RejectsCycleAndLeavesGraphUnchanged) {
  const auto g = graph_of({{"c1", "A"}, {"c2", "B"}, {"c3", "C"}},
                          {{"r1", RelationType::kIsA, "c1", "c2"},
                           {"r2", RelationType::kIsA, "c2", "c3"}});
  const auto copy = g;
  try {
    apply_edit(g, edit::AddRelation{RelationType::kIsA, "c3", "c1", std::nullopt});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalid);
    EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
  }
  EXPECT_EQ(g, copy);
}

TEST(ApplyEdit, ErrorsByKind) {
  const auto g = graph_of({{"c1", "A"}, {"c2", "B"}}, {{"r1", RelationType::kObject, "c1", "c2"}});
  auto code_of = [&](const Edit &e) {
    try {
      apply_edit(g, e);
    } catch (const Error &err) {
      return err.code();
    }
    return ErrorCode::kInternal;
  };
  EXPECT_EQ(code_of(edit::RemoveConcept{"c9"}), ErrorCode::kNotFound);
  EXPECT_EQ(code_of(edit::RenameConcept{"c9", "X"}), ErrorCode::kNotFound);
  EXPECT_EQ(code_of(edit::RemoveRelation{"r9"}), ErrorCode::kNotFound);
  EXPECT_EQ(code_of(edit::AddRelation{RelationType::kObject, "c1", "c9", std::nullopt}),
            ErrorCode::kNotFound);
  EXPECT_EQ(code_of(edit::AddConcept{"X", std::string("c1"), ConceptSource::kManual}),
            ErrorCode::kInvalid);
  EXPECT_EQ(code_of(edit::AddConcept{"", std::nullopt, ConceptSource::kManual}), ErrorCode::kInvalid);
  EXPECT_EQ(code_of(edit::RenameConcept{"c1", ""}), ErrorCode::kInvalid);
  EXPECT_EQ(code_of(edit::AddRelation{RelationType::kObject, "c1", "c1", std::nullopt}),
            ErrorCode::kInvalid);
  EXPECT_EQ(code_of(edit::AddRelation{RelationType::kObject, "c1", "c2", std::nullopt}),
            ErrorCode::kInvalid);
  EXPECT_EQ(code_of(edit::AddRelation{RelationType::kIsA, "c1", "c2", std::string("r1")}),
            ErrorCode::kInvalid);
}

TEST(ApplyEdit, RenameKeepsEdges) {
  const auto g = graph_of({{"c1", "A"}, {"c2", "B"}}, {{"r1", RelationType::kObject, "c1", "c2"}});
  const auto after = apply_edit(g, edit::RenameConcept{"c1", "Z"});
  EXPECT_EQ(after.find_concept("c1")->label, "Z");
  EXPECT_EQ(after.relations, g.relations);
}

// For every graph of at most 8 concepts, an IS_A edge is rejected exactly
// when the closure-based reference says it would create a cycle.
TEST(ApplyEditProperty, CycleRejectionMatchesReference) {
  std::mt19937 rng(8);
  for (int round = 0; round < 600; ++round) {
    OntologyGraph g = testing::random_graph(rng, 8);
    const std::size_t n = g.concepts.size();
    if (n < 2) continue;
    const std::string from = g.concepts[rng() % n].id, to = g.concepts[rng() % n].id;
    if (from == to) continue;
    bool duplicate = false;
    for (const Relation &r : g.relations) {
      duplicate |= r.type == RelationType::kIsA && r.from == from && r.to == to;
    }
    if (duplicate) continue;
    OntologyGraph probe = g;
    probe.relations.push_back({"probe", RelationType::kIsA, from, to});
    const bool expect_reject = testing::reference_has_is_a_cycle(probe);
    bool rejected = false;
    try {
      apply_edit(g, edit::AddRelation{RelationType::kIsA, from, to, std::nullopt});
    } catch (const Error &) {
      rejected = true;
    }
    EXPECT_EQ(rejected, expect_reject);
    EXPECT_EQ(is_a_acyclic(probe), !expect_reject);
  }
}

}  // namespace
}  // namespace okb
