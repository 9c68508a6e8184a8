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

// okb: command-line front end for ontology knowledge-base projects.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "okb/convert.h"
#include "okb/error.h"
#include "okb/service.h"
#include "okb/termstore.h"
#include "okb/workbench.h"

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw okb::Error(okb::ErrorCode::kNotFound, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string &path, const std::string &content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << content) || !out.flush()) {
    throw okb::Error(okb::ErrorCode::kInvalid, "cannot write " + path);
  }
}

// Runs a stage and reports FAILED as a user error with the logged reason.
okb::ProjectState run(okb::ProjectState p, okb::Stage stage, const fs::path &file,
                      const okb::StageOptions &options = {}) {
  p = okb::run_stage(std::move(p), stage, options);
  okb::save_project(p, file);
  if (p.status(stage) == okb::StageStatus::kFailed) {
    std::string reason = "stage failed";
    for (auto it = p.events.rbegin(); it != p.events.rend(); ++it) {
      if (it->stage == stage) {
        reason = it->message;
        break;
      }
    }
    throw okb::Error(okb::ErrorCode::kInvalid,
                     std::string(okb::to_string(stage)) + " " + reason);
  }
  return p;
}

void print_terms(const std::vector<okb::Term> &terms, std::size_t total) {
  std::cout << "All terms (" << total << ")\n";
  for (const okb::Term &t : terms) {
    std::cout << t.id << '\t' << (t.selected ? '*' : ' ') << ' ' << t.label() << " ("
              << t.frequency << ")\n";
  }
}

const okb::TermArchive &archive_of(const okb::ProjectState &p) {
  if (!p.archive) throw okb::Error(okb::ErrorCode::kConflict, "no analysis yet; run 'okb analyze'");
  return *p.archive;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Ontology knowledge-base workbench"};
  app.require_subcommand(1);
  std::string project_path = "okb-project.json";
  app.add_option("-p,--project", project_path, "Project file")->capture_default_str();

  std::string name;
  bool force = false;
  auto *cmd_new = app.add_subcommand("new", "Create a project file");
  cmd_new->add_option("name", name, "Project name")->required();
  cmd_new->add_flag("-f,--force", force, "Overwrite an existing project file");

  std::vector<std::string> files;
  auto *cmd_dict = app.add_subcommand("dict", "Manage dictionaries");
  cmd_dict->require_subcommand(1);
  auto *cmd_dict_add = cmd_dict->add_subcommand("add", "Attach TSV dictionaries and load them");
  cmd_dict_add->add_option("tsv", files, "Dictionary files")->required()->check(CLI::ExistingFile);

  auto *cmd_ingest = app.add_subcommand("ingest", "Add text documents and segment them");
  cmd_ingest->add_option("txt", files, "UTF-8 text files")->required()->check(CLI::ExistingFile);

  auto *cmd_analyze = app.add_subcommand("analyze", "Extract terms from the corpus");

  std::string kind;
  std::string query;
  auto *cmd_terms = app.add_subcommand("terms", "List extracted terms");
  cmd_terms->add_option("--kind", kind, "single, multi or abbr")
      ->check(CLI::IsMember({"single", "multi", "abbr"}, CLI::ignore_case));
  cmd_terms->add_option("--search", query, "Substring filter");

  std::vector<std::string> term_args;
  auto *cmd_select = app.add_subcommand("select", "Select terms by id or label");
  cmd_select->add_option("term", term_args)->required();
  auto *cmd_deselect = app.add_subcommand("deselect", "Deselect terms by id or label");
  cmd_deselect->add_option("term", term_args)->required();
  auto *cmd_selection = app.add_subcommand("selection", "Print selected term labels");

  std::string term;
  auto *cmd_sentences = app.add_subcommand("sentences", "Show the sentences of a term");
  cmd_sentences->add_option("term", term)->required();

  auto *cmd_build = app.add_subcommand("build", "Build the ontology draft from the selection");

  std::string format = "kvp";
  std::string output;
  auto *cmd_export = app.add_subcommand("export", "Export the ontology");
  cmd_export->add_option("--format", format)->check(CLI::IsMember({"kvp", "owl"}))
      ->capture_default_str();
  cmd_export->add_option("-o,--output", output, "Output file (stdout when omitted)");

  std::string from = "owl";
  std::string to = "kvp";
  std::string in_path;
  std::string out_path;
  auto *cmd_convert = app.add_subcommand("convert", "Convert between OWL and KVP");
  cmd_convert->add_option("--from", from)->check(CLI::IsMember({"owl", "kvp"}))
      ->capture_default_str();
  cmd_convert->add_option("--to", to)->check(CLI::IsMember({"owl", "kvp"}))->capture_default_str();
  cmd_convert->add_option("in", in_path)->required()->check(CLI::ExistingFile);
  cmd_convert->add_option("out", out_path, "Output file (stdout when omitted or '-')");

  auto *cmd_status = app.add_subcommand("status", "Show stage statuses");
  std::uint64_t since = 0;
  auto *cmd_events = app.add_subcommand("events", "Print the event log");
  cmd_events->add_option("--since", since);

  int port = 8080;
  std::string host = "127.0.0.1";
  auto *cmd_serve = app.add_subcommand("serve", "Serve the HTTP API");
  cmd_serve->add_option("--port", port)->capture_default_str();
  cmd_serve->add_option("--host", host)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const fs::path file = project_path;
  try {
    if (cmd_new->parsed()) {
      if (fs::exists(file) && !force) {
        throw okb::Error(okb::ErrorCode::kConflict,
                         file.string() + " already exists (use --force to overwrite)");
      }
      const okb::ProjectState p = okb::create_project(name);
      okb::save_project(p, file);
      std::cout << "created project " << p.name << " (" << p.id << ") in " << file.string()
                << "\n";
      return 0;
    }
    if (cmd_convert->parsed()) {
      const std::string input = read_file(in_path);
      std::string result;
      if (from == to) {
        throw okb::Error(okb::ErrorCode::kInvalid, "--from and --to must differ");
      } else if (from == "owl") {
        std::vector<std::string> warnings;
        result = okb::convert_owl_to_kvp(input, &warnings);
        for (const std::string &w : warnings) std::cerr << "warning: " << w << "\n";
      } else {
        result = okb::convert_kvp_to_owl(input);
      }
      write_output(out_path, result);
      return 0;
    }
    if (cmd_serve->parsed()) {
      okb::Service service;
      if (fs::exists(file)) {
        const std::string id = service.open(file);
        std::cout << "serving project " << id << " from " << file.string() << "\n";
      }
      std::cout << "listening on http://" << host << ":" << port << "\n" << std::flush;
      if (!okb::serve_http(service, host, port)) {
        throw okb::Error(okb::ErrorCode::kInvalid, "cannot listen on " + host + ":" +
                                                       std::to_string(port));
      }
      return 0;
    }

    okb::ProjectState p = okb::load_project(file);

    if (cmd_dict_add->parsed()) {
      for (const std::string &f : files) {
        okb::attach_dictionary(p, fs::path(f).filename().string(), read_file(f));
      }
      p = run(std::move(p), okb::Stage::kLoadDicts, file);
      for (const auto &d : p.lexicon_errors) {
        std::cerr << "warning: line " << d.line << ": " << d.message << "\n";
      }
      std::cout << p.events[p.events.size() - 2].message << "\n";
    } else if (cmd_ingest->parsed()) {
      for (const std::string &f : files) {
        okb::add_document(p, fs::path(f).filename().string(), read_file(f));
      }
      p = run(std::move(p), okb::Stage::kIngest, file);
      std::cout << p.events[p.events.size() - 2].message << "\n";
    } else if (cmd_analyze->parsed()) {
      p = run(std::move(p), okb::Stage::kAnalyze, file);
      std::cout << "analysis complete: " << p.archive->total() << " terms\n";
    } else if (cmd_terms->parsed()) {
      const okb::TermArchive &archive = archive_of(p);
      std::optional<okb::TermKind> k;
      if (!kind.empty()) {
        for (char &c : kind) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        k = okb::parse_term_kind(kind);
      }
      okb::TermArchive subset;
      subset.terms = okb::filter_terms(archive, k);
      print_terms(query.empty() ? subset.terms : okb::search(subset, query), archive.total());
    } else if (cmd_select->parsed() || cmd_deselect->parsed()) {
      const bool on = cmd_select->parsed();
      for (const std::string &t : term_args) okb::set_term_selected(p, t, on);
      okb::save_project(p, file);
      std::cout << okb::selection(archive_of(p)).size() << " terms selected\n";
    } else if (cmd_selection->parsed()) {
      std::cout << okb::export_selection(archive_of(p));
    } else if (cmd_sentences->parsed()) {
      const okb::TermArchive &archive = archive_of(p);
      const okb::Term *t = okb::find_term(archive, term);
      if (t == nullptr) throw okb::Error(okb::ErrorCode::kNotFound, "no such term '" + term + "'");
      for (const okb::SentenceRef &ref : t->sentences) {
        for (const okb::Document &d : p.documents) {
          if (d.id == ref.doc_id && ref.sentence < d.sentences.size()) {
            std::cout << d.id << ':' << ref.sentence << '\t' << d.sentences[ref.sentence].text
                      << "\n";
          }
        }
      }
    } else if (cmd_build->parsed()) {
      p = run(std::move(p), okb::Stage::kBuildOntology, file);
      std::cout << p.events[p.events.size() - 2].message << "\n";
    } else if (cmd_export->parsed()) {
      okb::StageOptions options;
      options.format = *okb::parse_export_format(format);
      p = run(std::move(p), okb::Stage::kExport, file, options);
      write_output(output, p.last_export->content);
    } else if (cmd_status->parsed()) {
      std::cout << p.name << " (" << p.id << ")\n";
      for (okb::Stage s : okb::kAllStages) {
        std::cout << "  " << okb::to_string(s) << ": " << okb::to_string(p.status(s)) << "\n";
      }
    } else if (cmd_events->parsed()) {
      for (const okb::Event &e : p.events) {
        if (e.seq <= since) continue;
        std::cout << e.seq << '\t' << e.time_ms << '\t'
                  << (e.stage ? okb::to_string(*e.stage) : std::string_view("-")) << '\t'
                  << e.message << "\n";
      }
    }
    return 0;
  } catch (const okb::Error &e) {
    std::cerr << "okb: " << e.what() << "\n";
    return e.code() == okb::ErrorCode::kInternal ? 2 : 1;
  } catch (const std::exception &e) {
    std::cerr << "okb: internal error: " << e.what() << "\n";
    return 2;
  }
}
