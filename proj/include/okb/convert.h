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

#ifndef OKB_CONVERT_H_
#define OKB_CONVERT_H_

#include <string>
#include <string_view>
#include <vector>

#include "okb/ontology.h"

namespace okb {

struct OwlImport {
  OntologyGraph graph;
  std::vector<std::string> warnings;
};

// Reads the supported RDF/XML subset: owl:Class (+rdfs:label), rdfs:subClassOf
// a named class (IS_A) and rdfs:subClassOf an owl:Restriction with
// onProperty/someValuesFrom (typed by the property's local name: object,
// partOf, attribute, associated). Anything else becomes a warning. Throws
// okb::Error(kInvalid) with a line/column on malformed XML.
OwlImport parse_owl(std::string_view document);

// Deterministic RDF/XML. Refuses (okb::Error kInvalid) graphs that fail
// validate().
std::string emit_owl(const OntologyGraph &graph);

// Concepts sorted by label length in code points, then label bytes, then
// original id get ids c1..cN; relations
// sorted by (from, to, type) get r1..rN.
OntologyGraph canonicalize(const OntologyGraph &graph);

// Canonical KVP XML: fixed attribute order, 2-space indent, LF endings.
std::string emit_kvp(const OntologyGraph &graph);

// Strict schema check; errors name the element and its line.
OntologyGraph parse_kvp(std::string_view document);

// OWL text -> KVP text, warnings appended to `warnings` when given.
std::string convert_owl_to_kvp(std::string_view owl, std::vector<std::string> *warnings = nullptr);
std::string convert_kvp_to_owl(std::string_view kvp);

}  // namespace okb

#endif  // OKB_CONVERT_H_
