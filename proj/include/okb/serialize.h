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

#ifndef OKB_SERIALIZE_H_
#define OKB_SERIALIZE_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "okb/analyzer.h"
#include "okb/corpus.h"
#include "okb/lexicon.h"
#include "okb/ontology.h"
#include "okb/termstore.h"
#include "okb/workbench.h"

// JSON mappings shared by the project file and the HTTP API. Enums travel as
// their wire names.
namespace okb {

using Json = nlohmann::json;

void to_json(Json &j, const Features &f);
void from_json(const Json &j, Features &f);
void to_json(Json &j, const LexEntry &e);
void from_json(const Json &j, LexEntry &e);
void to_json(Json &j, const Lexicon &lex);
void from_json(const Json &j, Lexicon &lex);
void to_json(Json &j, const LoadDiagnostic &d);
void from_json(const Json &j, LoadDiagnostic &d);

void to_json(Json &j, const Token &t);
void from_json(const Json &j, Token &t);
void to_json(Json &j, const Sentence &s);
void from_json(const Json &j, Sentence &s);
void to_json(Json &j, const Document &d);
void from_json(const Json &j, Document &d);

void to_json(Json &j, const TaggedToken &t);
void from_json(const Json &j, TaggedToken &t);
void to_json(Json &j, const DependencyLink &l);
void from_json(const Json &j, DependencyLink &l);
void to_json(Json &j, const TermOccurrence &o);
void from_json(const Json &j, TermOccurrence &o);
void to_json(Json &j, const SentenceAnalysis &a);
void from_json(const Json &j, SentenceAnalysis &a);

void to_json(Json &j, const SentenceRef &r);
void from_json(const Json &j, SentenceRef &r);
void to_json(Json &j, const Term &t);
void from_json(const Json &j, Term &t);
void to_json(Json &j, const TermArchive &a);
void from_json(const Json &j, TermArchive &a);

void to_json(Json &j, const Concept &c);
void from_json(const Json &j, Concept &c);
void to_json(Json &j, const Relation &r);
void from_json(const Json &j, Relation &r);
void to_json(Json &j, const OntologyGraph &g);
void from_json(const Json &j, OntologyGraph &g);

void to_json(Json &j, const Event &e);
void from_json(const Json &j, Event &e);
void to_json(Json &j, const ProjectState &p);
void from_json(const Json &j, ProjectState &p);

// {"op": "add_concept" | "rename_concept" | "remove_concept" |
//  "add_relation" | "remove_relation", ...}
Edit edit_from_json(const Json &j);
Json edit_to_json(const Edit &edit);

std::string project_to_string(const ProjectState &p);
// Throws okb::Error(kInvalid) with "corrupt project" or a version message.
ProjectState project_from_string(std::string_view text);

}  // namespace okb

#endif  // OKB_SERIALIZE_H_
