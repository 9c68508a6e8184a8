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

#include "okb/service.h"

#include <functional>
#include <regex>
#include <utility>

#include "okb/convert.h"
#include "okb/serialize.h"
#include "okb/termstore.h"

namespace okb {

namespace {

ApiResponse json_response(int status, const Json &body) {
  return {status, "application/json", body.dump() + "\n"};
}

ApiResponse error_response(ErrorCode code, const std::string &message) {
  return json_response(http_status(code),
                       Json{{"code", to_string(code)},
                            {"message", message.empty() ? "error" : message}});
}

Json parse_body(const std::string &body) {
  try {
    return Json::parse(body);
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kInvalid, std::string("malformed request body: ") + e.what());
  }
}

std::string query_value(const ApiRequest &r, const std::string &key, std::string fallback = {}) {
  auto it = r.query.find(key);
  return it == r.query.end() ? fallback : it->second;
}

bool truthy(const std::string &value) { return value == "1" || value == "true" || value == "yes"; }

Json status_json(const ProjectState &p, bool running) {
  Json stages = Json::object();
  for (Stage s : kAllStages) stages[std::string(to_string(s))] = to_string(p.status(s));
  Json j{{"id", p.id},
         {"name", p.name},
         {"running", running},
         {"stages", stages},
         {"dictionaries", p.dictionaries.size()},
         {"documents", p.sources.size()},
         {"terms", nullptr},
         {"selected", 0},
         {"ontology", nullptr},
         {"last_event", p.events.empty() ? 0 : p.events.back().seq}};
  if (p.archive) {
    j["terms"] = p.archive->total();
    j["selected"] = selection(*p.archive).size();
  }
  if (p.ontology) {
    j["ontology"] = {{"concepts", p.ontology->concepts.size()},
                     {"relations", p.ontology->relations.size()}};
  }
  return j;
}

std::string content_type_for(ExportFormat format) {
  return format == ExportFormat::kOwl ? "application/rdf+xml; charset=utf-8"
                                      : "application/xml; charset=utf-8";
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kInvalid:
      return 400;
    case ErrorCode::kConflict:
      return 409;
    case ErrorCode::kInternal:
      return 500;
  }
  return 500;
}

Service::Service() = default;

Service::~Service() { wait_idle(); }

void Service::wait_idle() {
  std::vector<std::thread> workers;
  {
    std::lock_guard lock(mutex_);
    workers.swap(workers_);
  }
  for (std::thread &t : workers) t.join();
}

std::shared_ptr<Service::Slot> Service::slot(const std::string &id) const {
  std::lock_guard lock(mutex_);
  auto it = projects_.find(id);
  if (it == projects_.end()) throw Error(ErrorCode::kNotFound, "no such project '" + id + "'");
  return it->second;
}

std::shared_ptr<Service::Slot> Service::add(ProjectState state,
                                            std::optional<std::filesystem::path> file) {
  auto s = std::make_shared<Slot>();
  s->state = std::move(state);
  s->file = std::move(file);
  std::lock_guard lock(mutex_);
  projects_[s->state.id] = s;
  return s;
}

std::string Service::open(const std::filesystem::path &path) {
  ProjectState p = load_project(path);
  std::string id = p.id;
  add(std::move(p), path);
  return id;
}

std::optional<ProjectState> Service::snapshot(const std::string &id) const {
  std::shared_ptr<Slot> s;
  try {
    s = slot(id);
  } catch (const Error &) {
    return std::nullopt;
  }
  std::lock_guard lock(s->mutex);
  return s->state;
}

void Service::run_stage_async(std::shared_ptr<Slot> s, Stage stage, StageOptions options,
                              bool wait) {
  auto work = [s, stage, options] {
    ProjectState copy;
    {
      std::lock_guard lock(s->mutex);
      copy = s->state;
    }
    finish_stage(copy, stage, options);
    std::lock_guard lock(s->mutex);
    s->state = std::move(copy);
    s->running = false;
    if (s->file) {
      try {
        save_project(s->state, *s->file);
      } catch (const std::exception &e) {
        append_event(s->state, std::nullopt, std::string("save failed: ") + e.what());
      }
    }
  };
  if (wait) {
    work();
    return;
  }
  std::lock_guard lock(mutex_);
  workers_.emplace_back(std::move(work));
}

ApiResponse Service::handle(const ApiRequest &req) {
  static const std::regex kProject(R"(^/projects/([^/]+)(/.*)?$)");
  static const std::regex kStage(R"(^/stages/([^/]+)$)");
  static const std::regex kTermSentences(R"(^/terms/([^/]+)/sentences$)");
  static const std::regex kTermSelected(R"(^/terms/([^/]+)/selected$)");

  try {
    if (req.path == "/projects" && req.method == "POST") {
      std::string name = query_value(req, "name");
      if (name.empty() && !req.body.empty()) {
        const Json body = parse_body(req.body);
        if (!body.is_object()) throw Error(ErrorCode::kInvalid, "expected an object body");
        name = body.value("name", std::string());
      }
      auto s = add(create_project(name), std::nullopt);
      std::lock_guard lock(s->mutex);
      return json_response(201, status_json(s->state, false));
    }
    if (req.path == "/projects" && req.method == "GET") {
      Json list = Json::array();
      std::lock_guard lock(mutex_);
      for (const auto &[id, s] : projects_) {
        std::lock_guard slot_lock(s->mutex);
        list.push_back({{"id", id}, {"name", s->state.name}});
      }
      return json_response(200, Json{{"projects", list}});
    }
    if (req.path == "/convert" && req.method == "POST") {
      const std::string from = query_value(req, "from", "owl");
      const std::string to = query_value(req, "to", "kvp");
      if (from == "owl" && to == "kvp") {
        return {200, content_type_for(ExportFormat::kKvp), convert_owl_to_kvp(req.body)};
      }
      if (from == "kvp" && to == "owl") {
        return {200, content_type_for(ExportFormat::kOwl), convert_kvp_to_owl(req.body)};
      }
      throw Error(ErrorCode::kInvalid, "unsupported conversion " + from + " -> " + to);
    }

    std::smatch m;
    if (!std::regex_match(req.path, m, kProject)) {
      return error_response(ErrorCode::kNotFound, "no route for " + req.method + " " + req.path);
    }
    std::shared_ptr<Slot> s = slot(m[1].str());
    const std::string rest = m[2].str();
    const bool get = req.method == "GET";

    std::unique_lock lock(s->mutex);
    ProjectState &p = s->state;

    if (get) {
      if (rest == "/status" || rest.empty()) return json_response(200, status_json(p, s->running));
      if (rest == "/terms") {
        if (!p.archive) throw Error(ErrorCode::kConflict, "no analysis yet");
        std::optional<TermKind> kind;
        if (std::string k = query_value(req, "kind"); !k.empty() && k != "all") {
          for (char &c : k) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
          kind = parse_term_kind(k);
          if (!kind) throw Error(ErrorCode::kInvalid, "unknown term kind '" + k + "'");
        }
        std::vector<Term> terms = filter_terms(*p.archive, kind);
        if (std::string q = query_value(req, "q"); !q.empty()) {
          TermArchive subset;
          subset.terms = std::move(terms);
          terms = search(subset, q);
        }
        return json_response(200, Json{{"total", p.archive->total()},
                                       {"count", terms.size()},
                                       {"terms", terms}});
      }
      if (std::smatch t; std::regex_match(rest, t, kTermSentences)) {
        if (!p.archive) throw Error(ErrorCode::kConflict, "no analysis yet");
        const Term *term = find_term(*p.archive, t[1].str());
        if (term == nullptr) throw Error(ErrorCode::kNotFound, "no such term");
        Json list = Json::array();
        for (const Sentence &sentence : sentences_of(*p.archive, p.documents, term->id)) {
          list.push_back({{"index", sentence.index}, {"text", sentence.text}});
        }
        Json refs = term->sentences;
        return json_response(200, Json{{"term", term->id},
                                       {"label", term->label()},
                                       {"refs", refs},
                                       {"sentences", list}});
      }
      if (rest == "/ontology") {
        if (!p.ontology) throw Error(ErrorCode::kConflict, "no ontology yet");
        return json_response(200, Json(*p.ontology));
      }
      if (rest == "/export") {
        const std::string f = query_value(req, "format", "kvp");
        const auto format = parse_export_format(f);
        if (!format) throw Error(ErrorCode::kInvalid, "unknown export format '" + f + "'");
        return {200, content_type_for(*format), export_ontology(p, *format)};
      }
      if (rest == "/events") {
        std::uint64_t since = 0;
        if (std::string v = query_value(req, "since"); !v.empty()) {
          try {
            since = std::stoull(v);
          } catch (const std::exception &) {
            throw Error(ErrorCode::kInvalid, "bad 'since' value '" + v + "'");
          }
        }
        Json list = Json::array();
        for (const Event &e : p.events) {
          if (e.seq > since) list.push_back(e);
        }
        return json_response(200, Json{{"events", list},
                                       {"last", p.events.empty() ? 0 : p.events.back().seq}});
      }
      return error_response(ErrorCode::kNotFound, "no route for GET " + req.path);
    }

    // Everything below mutates the project.
    auto mutation = [&](const std::function<ApiResponse()> &apply) {
      if (s->running) throw Error(ErrorCode::kConflict, "a stage is running");
      ApiResponse r = apply();
      if (s->file) save_project(p, *s->file);
      return r;
    };

    if (req.method == "POST" && (rest == "/dictionaries" || rest == "/documents")) {
      return mutation([&] {
        const std::string name = query_value(req, "name", "upload");
        if (rest == "/dictionaries") {
          attach_dictionary(p, name, req.body);
        } else {
          add_document(p, name, req.body);
        }
        return json_response(201, status_json(p, false));
      });
    }
    if (std::smatch t; req.method == "POST" && std::regex_match(rest, t, kStage)) {
      const auto stage = parse_stage(t[1].str());
      if (!stage) throw Error(ErrorCode::kNotFound, "unknown stage '" + t[1].str() + "'");
      StageOptions options;
      if (std::string f = query_value(req, "format"); !f.empty()) {
        const auto format = parse_export_format(f);
        if (!format) throw Error(ErrorCode::kInvalid, "unknown export format '" + f + "'");
        options.format = *format;
      }
      const bool wait = truthy(query_value(req, "wait"));
      if (s->running) throw Error(ErrorCode::kConflict, "a stage is running");
      begin_stage(p, *stage);
      s->running = true;
      lock.unlock();
      run_stage_async(s, *stage, options, wait);
      lock.lock();
      return json_response(wait ? 200 : 202, status_json(p, s->running));
    }
    if (std::smatch t; req.method == "PUT" && std::regex_match(rest, t, kTermSelected)) {
      return mutation([&] {
        const Json body = parse_body(req.body);
        if (!body.is_object() || !body.contains("on") || !body.at("on").is_boolean()) {
          throw Error(ErrorCode::kInvalid, "expected {\"on\": true|false}");
        }
        set_term_selected(p, t[1].str(), body.at("on").get<bool>());
        return json_response(200, Json(*find_term(*p.archive, t[1].str())));
      });
    }
    if (req.method == "PUT" && rest == "/ontology") {
      return mutation([&] {
        OntologyGraph graph;
        try {
          graph = parse_body(req.body).get<OntologyGraph>();
        } catch (const Json::exception &e) {
          throw Error(ErrorCode::kInvalid, std::string("malformed ontology: ") + e.what());
        }
        replace_ontology(p, std::move(graph));
        return json_response(200, Json(*p.ontology));
      });
    }
    if (req.method == "POST" && rest == "/ontology/edits") {
      return mutation([&] {
        const Json body = parse_body(req.body);
        std::vector<Edit> edits;
        try {
          if (body.is_array()) {
            for (const Json &e : body) edits.push_back(edit_from_json(e));
          } else {
            edits.push_back(edit_from_json(body));
          }
        } catch (const Json::exception &e) {
          throw Error(ErrorCode::kInvalid, std::string("malformed edit: ") + e.what());
        }
        ProjectState next = p;
        for (const Edit &e : edits) apply_ontology_edit(next, e);
        p = std::move(next);
        return json_response(200, Json(*p.ontology));
      });
    }
    return error_response(ErrorCode::kNotFound, "no route for " + req.method + " " + req.path);
  } catch (const Error &e) {
    return error_response(e.code(), e.what());
  } catch (const std::exception &e) {
    return error_response(ErrorCode::kInternal, e.what());
  }
}

}  // namespace okb
