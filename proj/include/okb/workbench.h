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

#ifndef OKB_WORKBENCH_H_
#define OKB_WORKBENCH_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "okb/analyzer.h"
#include "okb/corpus.h"
#include "okb/lexicon.h"
#include "okb/ontology.h"
#include "okb/termstore.h"

namespace okb {

// Pipeline stages. LOAD_DICTS and INGEST feed ANALYZE, which feeds
// BUILD_ONTOLOGY, which feeds EXPORT.
enum class Stage { kLoadDicts, kIngest, kAnalyze, kBuildOntology, kExport };
enum class StageStatus { kPending, kRunning, kDone, kFailed };
enum class ExportFormat { kKvp, kOwl };

inline constexpr Stage kAllStages[] = {Stage::kLoadDicts, Stage::kIngest, Stage::kAnalyze,
                                       Stage::kBuildOntology, Stage::kExport};

std::string_view to_string(Stage stage);
std::string_view to_string(StageStatus status);
std::string_view to_string(ExportFormat format);
std::optional<Stage> parse_stage(std::string_view s);
std::optional<StageStatus> parse_stage_status(std::string_view s);
std::optional<ExportFormat> parse_export_format(std::string_view s);

std::vector<Stage> prerequisites(Stage stage);
// Every stage that transitively depends on `stage`.
std::vector<Stage> downstream(Stage stage);

struct Event {
  std::uint64_t seq = 0;
  std::int64_t time_ms = 0;  // strictly increasing within a project
  std::optional<Stage> stage;
  std::string message;

  bool operator==(const Event &) const = default;
};

struct DictionarySource {
  std::string name;
  std::string content;

  bool operator==(const DictionarySource &) const = default;
};

struct DocumentSource {
  std::string name;
  std::string raw;

  bool operator==(const DocumentSource &) const = default;
};

struct ExportRecord {
  ExportFormat format = ExportFormat::kKvp;
  std::string content;

  bool operator==(const ExportRecord &) const = default;
};

struct ProjectState {
  std::string id;
  std::string name;

  // Attached resources.
  std::vector<DictionarySource> dictionaries;
  std::vector<DocumentSource> sources;

  // Stage artifacts.
  std::optional<Lexicon> lexicon;
  std::vector<LoadDiagnostic> lexicon_errors;
  std::vector<Document> documents;
  std::vector<SentenceAnalysis> analyses;
  std::optional<TermArchive> archive;
  std::optional<OntologyGraph> ontology;
  std::optional<ExportRecord> last_export;

  std::map<Stage, StageStatus> stages;
  std::vector<Event> events;

  StageStatus status(Stage stage) const;

  bool operator==(const ProjectState &) const = default;
};

inline constexpr int kProjectFormatVersion = 1;

// All stages PENDING, no resources. Throws okb::Error(kInvalid) for an empty
// name. Every call gets a fresh random id.
ProjectState create_project(std::string name);

void append_event(ProjectState &p, std::optional<Stage> stage, std::string message);

// Resource changes reset the consuming stage and everything downstream.
void attach_dictionary(ProjectState &p, std::string name, std::string content);
void add_document(ProjectState &p, std::string name, std::string raw);

struct StageOptions {
  ExportFormat format = ExportFormat::kKvp;
};

// RUNNING, downstream stages back to PENDING, "started" event.
void begin_stage(ProjectState &p, Stage stage);

// Checks preconditions and does the work of a stage begun with begin_stage.
// Ends DONE, or FAILED with the error logged; artifacts change only on DONE.
void finish_stage(ProjectState &p, Stage stage, const StageOptions &options = {});

ProjectState run_stage(ProjectState p, Stage stage, const StageOptions &options = {});

// True when no stage is DONE while one of its prerequisites is not DONE.
bool stage_order_holds(const ProjectState &p);

// Selects or deselects a term by id or exact label. Throws kNotFound for
// unknown terms and kConflict before analysis. A change resets
// BUILD_ONTOLOGY and EXPORT to PENDING.
void set_term_selected(ProjectState &p, std::string_view term, bool on);

// Throws kConflict when there is no ontology yet.
void apply_ontology_edit(ProjectState &p, const Edit &edit);
void replace_ontology(ProjectState &p, OntologyGraph graph);

std::string export_ontology(const ProjectState &p, ExportFormat format);

void save_project(const ProjectState &p, const std::filesystem::path &path);
ProjectState load_project(const std::filesystem::path &path);

}  // namespace okb

#endif  // OKB_WORKBENCH_H_
