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

#include "okb/workbench.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <system_error>
#include <tuple>

#include "okb/convert.h"
#include "okb/error.h"
#include "okb/serialize.h"

namespace okb {

namespace {

struct StageName {
  Stage stage;
  std::string_view name;
};

constexpr StageName kStageNames[] = {{Stage::kLoadDicts, "LOAD_DICTS"},
                                     {Stage::kIngest, "INGEST"},
                                     {Stage::kAnalyze, "ANALYZE"},
                                     {Stage::kBuildOntology, "BUILD_ONTOLOGY"},
                                     {Stage::kExport, "EXPORT"}};

constexpr std::string_view kStatusNames[] = {"PENDING", "RUNNING", "DONE", "FAILED"};

std::int64_t now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

std::string random_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::uniform_int_distribution<std::uint64_t> dist;
  static constexpr char kHex[] = "0123456789abcdef";
  std::uint64_t bits = dist(rng);
  std::string id(16, '0');
  for (char &c : id) {
    c = kHex[bits & 0xf];
    bits >>= 4;
  }
  return id;
}

void reset(ProjectState &p, Stage stage) {
  if (p.status(stage) != StageStatus::kPending) p.stages[stage] = StageStatus::kPending;
}

void reset_with_downstream(ProjectState &p, Stage stage) {
  reset(p, stage);
  for (Stage s : downstream(stage)) reset(p, s);
}

void require_done(const ProjectState &p, Stage stage) {
  for (Stage pre : prerequisites(stage)) {
    if (p.status(pre) != StageStatus::kDone) {
      throw Error(ErrorCode::kConflict, std::string(to_string(pre)) + " is not done");
    }
  }
}

// Keyed by (citation lemmas, kind), which survives re-numbering.
using TermIdentity = std::tuple<std::vector<std::string>, TermKind>;

void carry_selection(const std::optional<TermArchive> &previous, TermArchive &next) {
  if (!previous) return;
  std::map<TermIdentity, bool> chosen;
  for (const Term &t : previous->terms) {
    if (t.selected) chosen[{t.key, t.kind}] = true;
  }
  for (Term &t : next.terms) t.selected = chosen.count({t.key, t.kind}) > 0;
}

void run_load_dicts(ProjectState &p) {
  if (p.dictionaries.empty()) throw Error(ErrorCode::kInvalid, "no dictionaries");
  Lexicon merged;
  std::vector<LoadDiagnostic> errors;
  std::vector<std::string> messages;
  for (const DictionarySource &d : p.dictionaries) {
    LexiconLoad load = load_lexicon_text(d.content, d.name);
    for (const LoadDiagnostic &e : load.errors) {
      messages.push_back(d.name + ": line " + std::to_string(e.line) + ": " + e.message);
    }
    errors.insert(errors.end(), load.errors.begin(), load.errors.end());
    merged.merge(load.lexicon);
  }
  if (merged.empty()) throw Error(ErrorCode::kInvalid, "empty dictionary");
  for (std::string &m : messages) append_event(p, Stage::kLoadDicts, std::move(m));
  append_event(p, Stage::kLoadDicts,
               "loaded " + std::to_string(merged.size()) + " entries from " +
                   std::to_string(p.dictionaries.size()) + " dictionaries");
  p.lexicon = std::move(merged);
  p.lexicon_errors = std::move(errors);
}

void run_ingest(ProjectState &p) {
  if (p.sources.empty()) throw Error(ErrorCode::kInvalid, "no documents");
  Corpus corpus;
  std::size_t sentences = 0;
  for (const DocumentSource &s : p.sources) sentences += corpus.add(s.raw, s.name).sentences.size();
  append_event(p, Stage::kIngest,
               "ingested " + std::to_string(corpus.documents().size()) + " documents, " +
                   std::to_string(sentences) + " sentences");
  p.documents = corpus.documents();
}

void run_analyze(ProjectState &p) {
  if (p.sources.empty()) throw Error(ErrorCode::kInvalid, "no documents");
  if (p.dictionaries.empty()) throw Error(ErrorCode::kInvalid, "no dictionaries");
  require_done(p, Stage::kAnalyze);
  std::vector<SentenceAnalysis> analyses = analyze_corpus(p.documents, *p.lexicon);
  TermArchive archive = aggregate(std::span<const SentenceAnalysis>(analyses));
  carry_selection(p.archive, archive);
  append_event(p, Stage::kAnalyze,
               "analysis complete: " + std::to_string(archive.total()) + " terms");
  p.analyses = std::move(analyses);
  p.archive = std::move(archive);
}

void run_build(ProjectState &p) {
  require_done(p, Stage::kBuildOntology);
  const std::vector<Term> chosen = selection(*p.archive);
  if (chosen.empty()) throw Error(ErrorCode::kInvalid, "nothing selected");
  OntologyGraph graph = build_draft(chosen, p.analyses, p.name);
  append_event(p, Stage::kBuildOntology,
               "ontology draft: " + std::to_string(graph.concepts.size()) + " concepts, " +
                   std::to_string(graph.relations.size()) + " relations");
  p.ontology = std::move(graph);
}

void run_export(ProjectState &p, ExportFormat format) {
  require_done(p, Stage::kExport);
  std::string content = export_ontology(p, format);
  append_event(p, Stage::kExport,
               "exported " + std::string(to_string(format)) + " (" +
                   std::to_string(content.size()) + " bytes)");
  p.last_export = ExportRecord{format, std::move(content)};
}

}  // namespace

std::string_view to_string(Stage stage) {
  for (const auto &[s, name] : kStageNames) {
    if (s == stage) return name;
  }
  return "?";
}

std::string_view to_string(StageStatus status) {
  return kStatusNames[static_cast<int>(status)];
}

std::string_view to_string(ExportFormat format) {
  return format == ExportFormat::kKvp ? "kvp" : "owl";
}

std::optional<Stage> parse_stage(std::string_view s) {
  for (const auto &[stage, name] : kStageNames) {
    if (name == s) return stage;
  }
  return std::nullopt;
}

std::optional<StageStatus> parse_stage_status(std::string_view s) {
  for (int i = 0; i < 4; ++i) {
    if (kStatusNames[i] == s) return static_cast<StageStatus>(i);
  }
  return std::nullopt;
}

std::optional<ExportFormat> parse_export_format(std::string_view s) {
  if (s == "kvp") return ExportFormat::kKvp;
  if (s == "owl") return ExportFormat::kOwl;
  return std::nullopt;
}

std::vector<Stage> prerequisites(Stage stage) {
  switch (stage) {
    case Stage::kLoadDicts:
    case Stage::kIngest:
      return {};
    case Stage::kAnalyze:
      return {Stage::kLoadDicts, Stage::kIngest};
    case Stage::kBuildOntology:
      return {Stage::kAnalyze};
    case Stage::kExport:
      return {Stage::kBuildOntology};
  }
  return {};
}

std::vector<Stage> downstream(Stage stage) {
  std::vector<Stage> out;
  for (Stage s : kAllStages) {
    for (Stage pre : prerequisites(s)) {
      if (pre == stage || std::find(out.begin(), out.end(), pre) != out.end()) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

StageStatus ProjectState::status(Stage stage) const {
  auto it = stages.find(stage);
  return it == stages.end() ? StageStatus::kPending : it->second;
}

ProjectState create_project(std::string name) {
  if (name.empty()) throw Error(ErrorCode::kInvalid, "project name must not be empty");
  ProjectState p;
  p.id = random_id();
  p.name = std::move(name);
  for (Stage s : kAllStages) p.stages[s] = StageStatus::kPending;
  append_event(p, std::nullopt, "project created");
  return p;
}

void append_event(ProjectState &p, std::optional<Stage> stage, std::string message) {
  Event e;
  e.seq = p.events.empty() ? 1 : p.events.back().seq + 1;
  e.time_ms = now_ms();
  if (!p.events.empty()) e.time_ms = std::max(e.time_ms, p.events.back().time_ms + 1);
  e.stage = stage;
  e.message = std::move(message);
  p.events.push_back(std::move(e));
}

void attach_dictionary(ProjectState &p, std::string name, std::string content) {
  // Rejects unusable uploads up front; row-level problems surface at LOAD_DICTS.
  load_lexicon_text(content, name);
  append_event(p, std::nullopt, "dictionary attached: " + name);
  p.dictionaries.push_back({std::move(name), std::move(content)});
  reset_with_downstream(p, Stage::kLoadDicts);
}

void add_document(ProjectState &p, std::string name, std::string raw) {
  ingest_document(raw, name);
  append_event(p, std::nullopt, "document added: " + name);
  p.sources.push_back({std::move(name), std::move(raw)});
  reset_with_downstream(p, Stage::kIngest);
}

void begin_stage(ProjectState &p, Stage stage) {
  p.stages[stage] = StageStatus::kRunning;
  for (Stage s : downstream(stage)) reset(p, s);
  append_event(p, stage, "started");
}

void finish_stage(ProjectState &p, Stage stage, const StageOptions &options) {
  ProjectState next = p;
  try {
    switch (stage) {
      case Stage::kLoadDicts:
        run_load_dicts(next);
        break;
      case Stage::kIngest:
        run_ingest(next);
        break;
      case Stage::kAnalyze:
        run_analyze(next);
        break;
      case Stage::kBuildOntology:
        run_build(next);
        break;
      case Stage::kExport:
        run_export(next, options.format);
        break;
    }
  } catch (const std::exception &e) {
    p.stages[stage] = StageStatus::kFailed;
    append_event(p, stage, std::string("failed: ") + e.what());
    return;
  }
  next.stages[stage] = StageStatus::kDone;
  append_event(next, stage, "done");
  p = std::move(next);
}

ProjectState run_stage(ProjectState p, Stage stage, const StageOptions &options) {
  begin_stage(p, stage);
  finish_stage(p, stage, options);
  return p;
}

bool stage_order_holds(const ProjectState &p) {
  for (Stage s : kAllStages) {
    if (p.status(s) != StageStatus::kDone) continue;
    for (Stage pre : prerequisites(s)) {
      if (p.status(pre) != StageStatus::kDone) return false;
    }
  }
  return true;
}

void set_term_selected(ProjectState &p, std::string_view term, bool on) {
  if (!p.archive) throw Error(ErrorCode::kConflict, "no analysis yet");
  const Term *t = find_term(*p.archive, term);
  if (t == nullptr) throw Error(ErrorCode::kNotFound, "no such term '" + std::string(term) + "'");
  if (t->selected == on) return;
  const std::string id = t->id;
  const std::string label = t->label();
  p.archive = set_selected(std::move(*p.archive), id, on);
  append_event(p, std::nullopt, (on ? "selected " : "deselected ") + label);
  reset_with_downstream(p, Stage::kBuildOntology);
}

void apply_ontology_edit(ProjectState &p, const Edit &edit) {
  if (!p.ontology) throw Error(ErrorCode::kConflict, "no ontology yet");
  OntologyGraph next = apply_edit(*p.ontology, edit);
  p.ontology = std::move(next);
  append_event(p, std::nullopt, "ontology edited");
  reset(p, Stage::kExport);
}

void replace_ontology(ProjectState &p, OntologyGraph graph) {
  const ValidationReport report = validate(graph);
  if (!report.empty()) {
    throw Error(ErrorCode::kInvalid, report.front().message);
  }
  p.ontology = std::move(graph);
  append_event(p, std::nullopt, "ontology replaced");
  reset(p, Stage::kExport);
}

std::string export_ontology(const ProjectState &p, ExportFormat format) {
  if (!p.ontology) throw Error(ErrorCode::kConflict, "no ontology yet");
  return format == ExportFormat::kKvp ? emit_kvp(*p.ontology) : emit_owl(*p.ontology);
}

void save_project(const ProjectState &p, const std::filesystem::path &path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kInvalid, "cannot write " + path.string());
    out << project_to_string(p);
    if (!out.flush()) throw Error(ErrorCode::kInvalid, "cannot write " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kInvalid, "cannot write " + path.string() + ": " + ec.message());
}

ProjectState load_project(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, "no project at " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return project_from_string(buf.str());
}

}  // namespace okb
