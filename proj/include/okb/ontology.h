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

#ifndef OKB_ONTOLOGY_H_
#define OKB_ONTOLOGY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "okb/analyzer.h"
#include "okb/termstore.h"

namespace okb {

enum class ConceptSource { kExtracted, kManual };
enum class RelationType { kIsA, kObject, kPartOf, kAttribute, kAssociated };

std::string_view to_string(ConceptSource source);
std::optional<ConceptSource> parse_concept_source(std::string_view s);

// Wire names used by KVP and the API: is-a, object, part-of, attribute,
// associated.
std::string_view to_string(RelationType type);
std::optional<RelationType> parse_relation_type(std::string_view s);

struct Concept {
  std::string id;
  std::string label;
  ConceptSource source = ConceptSource::kExtracted;

  bool operator==(const Concept &) const = default;
};

struct Relation {
  std::string id;
  RelationType type = RelationType::kAssociated;
  std::string from;
  std::string to;

  bool operator==(const Relation &) const = default;
};

struct OntologyGraph {
  std::string name;
  std::vector<Concept> concepts;
  std::vector<Relation> relations;

  const Concept *find_concept(std::string_view id) const;
  const Relation *find_relation(std::string_view id) const;

  bool operator==(const OntologyGraph &) const = default;
};

struct Violation {
  enum class Kind {
    kEmptyLabel,
    kDuplicateConceptId,
    kDuplicateRelationId,
    kDanglingEndpoint,
    kSelfLoop,
    kDuplicateRelation,
    kIsACycle,
  };
  Kind kind;
  std::string message;
  std::vector<std::string> ids;  // offending ids; cycle members sorted

  bool operator==(const Violation &) const = default;
};

using ValidationReport = std::vector<Violation>;

// Empty report iff every graph invariant holds. Each IS_A cycle (strongly
// connected component) is reported once.
ValidationReport validate(const OntologyGraph &graph);

// Kahn's topological sort over the IS_A edges between known concepts.
bool is_a_acyclic(const OntologyGraph &graph);

// One concept per selected term (ids c1.. in selection order), then:
//  IS_A      multiword term -> its selected head-noun term;
//  PART_OF   POSSESSIVE link between nouns heading two distinct selected
//            terms, part (possessed) -> whole (genitive possessor);
//  OBJECT    OBJECTIVE link: subject term (nearest preceding nominative
//            noun) -> object term;
//  ASSOCIATED remaining co-occurring, non-overlapping pairs, from < to by
//            label.
// Throws okb::Error("nothing selected") on an empty selection.
OntologyGraph build_draft(std::span<const Term> selection,
                          std::span<const SentenceAnalysis> analyses, std::string name);

namespace edit {

struct AddConcept {
  std::string label;
  std::optional<std::string> id;  // assigned "c<N>" when absent
  ConceptSource source = ConceptSource::kManual;
};
struct RenameConcept {
  std::string id;
  std::string label;
};
struct RemoveConcept {
  std::string id;
};
struct AddRelation {
  RelationType type = RelationType::kAssociated;
  std::string from;
  std::string to;
  std::optional<std::string> id;  // assigned "r<N>" when absent
};
struct RemoveRelation {
  std::string id;
};

}  // namespace edit

using Edit = std::variant<edit::AddConcept, edit::RenameConcept, edit::RemoveConcept,
                          edit::AddRelation, edit::RemoveRelation>;

// Returns the edited graph. Removing a concept drops its incident relations.
// Edits that would break an invariant throw okb::Error (kNotFound for
// missing ids, kInvalid otherwise) and leave `graph` untouched.
OntologyGraph apply_edit(const OntologyGraph &graph, const Edit &edit);

}  // namespace okb

#endif  // OKB_ONTOLOGY_H_
