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

#include "okb/serialize.h"

#include "okb/error.h"

namespace okb {

namespace {

template <typename Enum, typename Parser>
Enum parse_or_throw(const Json &j, Parser parse, std::string_view what) {
  const std::string s = j.get<std::string>();
  const auto value = parse(s);
  if (!value) throw Error(ErrorCode::kInvalid, "bad " + std::string(what) + " '" + s + "'");
  return *value;
}

template <typename T>
Json optional_to_json(const std::optional<T> &value) {
  return value ? Json(*value) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const Json &j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

void to_json(Json &j, const Features &f) { j = f.to_string(); }
void from_json(const Json &j, Features &f) { f = Features::parse(j.get<std::string>()); }

void to_json(Json &j, const LexEntry &e) {
  j = Json{{"surface", e.surface}, {"lemma", e.lemma}, {"pos", to_string(e.pos)},
           {"features", e.features}};
}
void from_json(const Json &j, LexEntry &e) {
  e.surface = j.at("surface").get<std::string>();
  e.lemma = j.at("lemma").get<std::string>();
  e.pos = parse_or_throw<Pos>(j.at("pos"), parse_pos, "pos");
  e.features = j.at("features").get<Features>();
}

void to_json(Json &j, const Lexicon &lex) {
  j = Json{{"sources", lex.sources()}, {"entries", lex.entries()}};
}
void from_json(const Json &j, Lexicon &lex) {
  lex = Lexicon();
  for (const Json &e : j.at("entries")) lex.add(e.get<LexEntry>());
  for (const Json &s : j.at("sources")) lex.add_source(s.get<std::string>());
}

void to_json(Json &j, const LoadDiagnostic &d) {
  j = Json{{"line", d.line}, {"message", d.message}};
}
void from_json(const Json &j, LoadDiagnostic &d) {
  d.line = j.at("line").get<std::size_t>();
  d.message = j.at("message").get<std::string>();
}

void to_json(Json &j, const Token &t) {
  j = Json{{"surface", t.surface}, {"start", t.start}, {"end", t.end},
           {"kind", to_string(t.kind)}};
}
void from_json(const Json &j, Token &t) {
  t.surface = j.at("surface").get<std::string>();
  t.start = j.at("start").get<std::size_t>();
  t.end = j.at("end").get<std::size_t>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "WORD") {
    t.kind = TokenKind::kWord;
  } else if (kind == "PUNCT") {
    t.kind = TokenKind::kPunct;
  } else if (kind == "NUM") {
    t.kind = TokenKind::kNum;
  } else {
    throw Error(ErrorCode::kInvalid, "bad token kind '" + kind + "'");
  }
}

void to_json(Json &j, const Sentence &s) {
  j = Json{{"index", s.index}, {"offset", s.offset}, {"text", s.text}, {"tokens", s.tokens}};
}
void from_json(const Json &j, Sentence &s) {
  s.index = j.at("index").get<std::size_t>();
  s.offset = j.at("offset").get<std::size_t>();
  s.text = j.at("text").get<std::string>();
  s.tokens = j.at("tokens").get<std::vector<Token>>();
}

void to_json(Json &j, const Document &d) {
  j = Json{{"id", d.id}, {"name", d.name}, {"text", d.text}, {"sentences", d.sentences}};
}
void from_json(const Json &j, Document &d) {
  d.id = j.at("id").get<std::string>();
  d.name = j.at("name").get<std::string>();
  d.text = j.at("text").get<std::string>();
  d.sentences = j.at("sentences").get<std::vector<Sentence>>();
}

void to_json(Json &j, const TaggedToken &t) {
  j = Json{{"token", t.token},
           {"lemma", t.lemma},
           {"pos", t.pos ? Json(to_string(*t.pos)) : Json(nullptr)},
           {"features", t.features},
           {"ambiguous", t.ambiguous},
           {"case_ambiguous", t.case_ambiguous}};
}
void from_json(const Json &j, TaggedToken &t) {
  t.token = j.at("token").get<Token>();
  t.lemma = j.at("lemma").get<std::string>();
  t.pos = j.at("pos").is_null()
              ? std::nullopt
              : std::optional<Pos>(parse_or_throw<Pos>(j.at("pos"), parse_pos, "pos"));
  t.features = j.at("features").get<Features>();
  t.ambiguous = j.at("ambiguous").get<bool>();
  t.case_ambiguous = j.at("case_ambiguous").get<bool>();
}

void to_json(Json &j, const DependencyLink &l) {
  j = Json{{"head", l.head}, {"dependent", l.dependent}, {"relation", to_string(l.relation)}};
}
void from_json(const Json &j, DependencyLink &l) {
  l.head = j.at("head").get<std::size_t>();
  l.dependent = j.at("dependent").get<std::size_t>();
  l.relation = parse_or_throw<LinkType>(j.at("relation"), parse_link_type, "link type");
}

void to_json(Json &j, const TermOccurrence &o) {
  j = Json{{"lemmas", o.lemmas}, {"normal_form", o.normal_form},
           {"pattern", to_string(o.pattern)}, {"doc", o.doc_id},
           {"sentence", o.sentence}, {"begin", o.begin},
           {"end", o.end}, {"head", o.head},
           {"nested", o.nested}};
}
void from_json(const Json &j, TermOccurrence &o) {
  o.lemmas = j.at("lemmas").get<std::vector<std::string>>();
  o.normal_form = j.at("normal_form").get<std::vector<std::string>>();
  o.pattern = parse_or_throw<TermPattern>(j.at("pattern"), parse_term_pattern, "pattern");
  o.doc_id = j.at("doc").get<std::string>();
  o.sentence = j.at("sentence").get<std::size_t>();
  o.begin = j.at("begin").get<std::size_t>();
  o.end = j.at("end").get<std::size_t>();
  o.head = j.at("head").get<std::size_t>();
  o.nested = j.at("nested").get<bool>();
}

void to_json(Json &j, const SentenceAnalysis &a) {
  j = Json{{"doc", a.doc_id}, {"sentence", a.sentence}, {"tagged", a.tagged},
           {"links", a.links}, {"occurrences", a.occurrences}};
}
void from_json(const Json &j, SentenceAnalysis &a) {
  a.doc_id = j.at("doc").get<std::string>();
  a.sentence = j.at("sentence").get<std::size_t>();
  a.tagged = j.at("tagged").get<std::vector<TaggedToken>>();
  a.links = j.at("links").get<std::vector<DependencyLink>>();
  a.occurrences = j.at("occurrences").get<std::vector<TermOccurrence>>();
}

void to_json(Json &j, const SentenceRef &r) {
  j = Json{{"doc", r.doc_id}, {"sentence", r.sentence}};
}
void from_json(const Json &j, SentenceRef &r) {
  r.doc_id = j.at("doc").get<std::string>();
  r.sentence = j.at("sentence").get<std::size_t>();
}

void to_json(Json &j, const Term &t) {
  j = Json{{"id", t.id},
           {"label", t.label()},
           {"lemmas", t.lemmas},
           {"key", t.key},
           {"pattern", to_string(t.pattern)},
           {"kind", to_string(t.kind)},
           {"frequency", t.frequency},
           {"sentences", t.sentences},
           {"selected", t.selected}};
}
void from_json(const Json &j, Term &t) {
  t.id = j.at("id").get<std::string>();
  t.lemmas = j.at("lemmas").get<std::vector<std::string>>();
  t.key = j.at("key").get<std::vector<std::string>>();
  t.pattern = parse_or_throw<TermPattern>(j.at("pattern"), parse_term_pattern, "pattern");
  t.kind = parse_or_throw<TermKind>(j.at("kind"), parse_term_kind, "term kind");
  t.frequency = j.at("frequency").get<std::size_t>();
  t.sentences = j.at("sentences").get<std::vector<SentenceRef>>();
  t.selected = j.at("selected").get<bool>();
}

void to_json(Json &j, const TermArchive &a) {
  j = Json{{"total", a.total()}, {"terms", a.terms}};
}
void from_json(const Json &j, TermArchive &a) {
  a.terms = j.at("terms").get<std::vector<Term>>();
  if (j.contains("total") && j.at("total").get<std::size_t>() != a.total()) {
    throw Error(ErrorCode::kInvalid, "term archive total does not match its terms");
  }
}

void to_json(Json &j, const Concept &c) {
  j = Json{{"id", c.id}, {"label", c.label}, {"source", to_string(c.source)}};
}
void from_json(const Json &j, Concept &c) {
  c.id = j.at("id").get<std::string>();
  c.label = j.at("label").get<std::string>();
  c.source = j.contains("source") ? parse_or_throw<ConceptSource>(
                                        j.at("source"), parse_concept_source, "concept source")
                                  : ConceptSource::kManual;
}

void to_json(Json &j, const Relation &r) {
  j = Json{{"id", r.id}, {"type", to_string(r.type)}, {"from", r.from}, {"to", r.to}};
}
void from_json(const Json &j, Relation &r) {
  r.id = j.at("id").get<std::string>();
  r.type = parse_or_throw<RelationType>(j.at("type"), parse_relation_type, "relation type");
  r.from = j.at("from").get<std::string>();
  r.to = j.at("to").get<std::string>();
}

void to_json(Json &j, const OntologyGraph &g) {
  j = Json{{"name", g.name}, {"concepts", g.concepts}, {"relations", g.relations}};
}
void from_json(const Json &j, OntologyGraph &g) {
  g.name = j.value("name", std::string());
  g.concepts = j.at("concepts").get<std::vector<Concept>>();
  g.relations = j.at("relations").get<std::vector<Relation>>();
}

void to_json(Json &j, const Event &e) {
  j = Json{{"seq", e.seq},
           {"time_ms", e.time_ms},
           {"stage", e.stage ? Json(to_string(*e.stage)) : Json(nullptr)},
           {"message", e.message}};
}
void from_json(const Json &j, Event &e) {
  e.seq = j.at("seq").get<std::uint64_t>();
  e.time_ms = j.at("time_ms").get<std::int64_t>();
  e.stage = j.at("stage").is_null()
                ? std::nullopt
                : std::optional<Stage>(parse_or_throw<Stage>(j.at("stage"), parse_stage, "stage"));
  e.message = j.at("message").get<std::string>();
}

void to_json(Json &j, const ProjectState &p) {
  Json stages = Json::object();
  for (const auto &[stage, status] : p.stages) stages[std::string(to_string(stage))] = to_string(status);
  Json dictionaries = Json::array();
  for (const auto &d : p.dictionaries) dictionaries.push_back({{"name", d.name}, {"content", d.content}});
  Json sources = Json::array();
  for (const auto &s : p.sources) sources.push_back({{"name", s.name}, {"raw", s.raw}});
  Json last_export = nullptr;
  if (p.last_export) {
    last_export = {{"format", to_string(p.last_export->format)},
                   {"content", p.last_export->content}};
  }
  j = Json{{"format", "okb-project"},
           {"version", kProjectFormatVersion},
           {"id", p.id},
           {"name", p.name},
           {"dictionaries", dictionaries},
           {"sources", sources},
           {"lexicon", optional_to_json(p.lexicon)},
           {"lexicon_errors", p.lexicon_errors},
           {"documents", p.documents},
           {"analyses", p.analyses},
           {"archive", optional_to_json(p.archive)},
           {"ontology", optional_to_json(p.ontology)},
           {"last_export", last_export},
           {"stages", stages},
           {"events", p.events}};
}

void from_json(const Json &j, ProjectState &p) {
  p = ProjectState();
  p.id = j.at("id").get<std::string>();
  p.name = j.at("name").get<std::string>();
  for (const Json &d : j.at("dictionaries")) {
    p.dictionaries.push_back({d.at("name").get<std::string>(), d.at("content").get<std::string>()});
  }
  for (const Json &s : j.at("sources")) {
    p.sources.push_back({s.at("name").get<std::string>(), s.at("raw").get<std::string>()});
  }
  p.lexicon = optional_from_json<Lexicon>(j.at("lexicon"));
  p.lexicon_errors = j.at("lexicon_errors").get<std::vector<LoadDiagnostic>>();
  p.documents = j.at("documents").get<std::vector<Document>>();
  p.analyses = j.at("analyses").get<std::vector<SentenceAnalysis>>();
  p.archive = optional_from_json<TermArchive>(j.at("archive"));
  p.ontology = optional_from_json<OntologyGraph>(j.at("ontology"));
  if (const Json &e = j.at("last_export"); !e.is_null()) {
    p.last_export = ExportRecord{
        parse_or_throw<ExportFormat>(e.at("format"), parse_export_format, "export format"),
        e.at("content").get<std::string>()};
  }
  for (const auto &[name, status] : j.at("stages").items()) {
    p.stages[parse_or_throw<Stage>(Json(name), parse_stage, "stage")] =
        parse_or_throw<StageStatus>(status, parse_stage_status, "stage status");
  }
  p.events = j.at("events").get<std::vector<Event>>();
}

Edit edit_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("op")) throw Error(ErrorCode::kInvalid, "edit needs an 'op'");
  const std::string op = j.at("op").get<std::string>();
  auto optional_string = [&](const char *key) -> std::optional<std::string> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::string>();
  };
  if (op == "add_concept") {
    return edit::AddConcept{j.at("label").get<std::string>(), optional_string("id"),
                            ConceptSource::kManual};
  }
  if (op == "rename_concept") {
    return edit::RenameConcept{j.at("id").get<std::string>(), j.at("label").get<std::string>()};
  }
  if (op == "remove_concept") return edit::RemoveConcept{j.at("id").get<std::string>()};
  if (op == "add_relation") {
    return edit::AddRelation{
        parse_or_throw<RelationType>(j.at("type"), parse_relation_type, "relation type"),
        j.at("from").get<std::string>(), j.at("to").get<std::string>(), optional_string("id")};
  }
  if (op == "remove_relation") return edit::RemoveRelation{j.at("id").get<std::string>()};
  throw Error(ErrorCode::kInvalid, "unknown edit op '" + op + "'");
}

Json edit_to_json(const Edit &e) {
  return std::visit(
      [](const auto &x) -> Json {
        using E = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<E, edit::AddConcept>) {
          Json j{{"op", "add_concept"}, {"label", x.label}};
          if (x.id) j["id"] = *x.id;
          return j;
        } else if constexpr (std::is_same_v<E, edit::RenameConcept>) {
          return Json{{"op", "rename_concept"}, {"id", x.id}, {"label", x.label}};
        } else if constexpr (std::is_same_v<E, edit::RemoveConcept>) {
          return Json{{"op", "remove_concept"}, {"id", x.id}};
        } else if constexpr (std::is_same_v<E, edit::AddRelation>) {
          Json j{{"op", "add_relation"}, {"type", to_string(x.type)}, {"from", x.from}, {"to", x.to}};
          if (x.id) j["id"] = *x.id;
          return j;
        } else {
          return Json{{"op", "remove_relation"}, {"id", x.id}};
        }
      },
      e);
}

std::string project_to_string(const ProjectState &p) { return Json(p).dump(1) + "\n"; }

ProjectState project_from_string(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception &) {
    throw Error(ErrorCode::kInvalid, "corrupt project");
  }
  if (!j.is_object() || j.value("format", std::string()) != "okb-project" ||
      !j.contains("version") || !j.at("version").is_number_integer()) {
    throw Error(ErrorCode::kInvalid, "corrupt project");
  }
  const int version = j.at("version").get<int>();
  if (version != kProjectFormatVersion) {
    throw Error(ErrorCode::kInvalid, "unsupported project version " + std::to_string(version) +
                                         " (expected " +
                                         std::to_string(kProjectFormatVersion) + ")");
  }
  try {
    return j.get<ProjectState>();
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kInvalid, std::string("corrupt project: ") + e.what());
  } catch (const Error &e) {
    throw Error(ErrorCode::kInvalid, std::string("corrupt project: ") + e.what());
  }
}

}  // namespace okb
