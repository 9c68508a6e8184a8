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

#include "okb/convert.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <set>

#include "okb/error.h"
#include "okb/text.h"
#include "okb/xml.h"

namespace okb {

namespace {

constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
constexpr std::string_view kDefaultBase = "urn:okb:ontology";

std::string_view property_name(RelationType type) {
  switch (type) {
    case RelationType::kObject: return "object";
    case RelationType::kPartOf: return "partOf";
    case RelationType::kAttribute: return "attribute";
    case RelationType::kAssociated: return "associated";
    case RelationType::kIsA: break;
  }
  return "associated";
}

std::optional<RelationType> relation_for_property(std::string_view local) {
  if (local == "object") return RelationType::kObject;
  if (local == "partOf") return RelationType::kPartOf;
  if (local == "attribute") return RelationType::kAttribute;
  if (local == "associated") return RelationType::kAssociated;
  return std::nullopt;
}

void require_valid(const OntologyGraph &graph, std::string_view what) {
  const ValidationReport report = validate(graph);
  if (!report.empty()) {
    throw Error(ErrorCode::kInvalid,
                "refusing to emit " + std::string(what) + ": " + report.front().message);
  }
}

// ---- OWL reading -------------------------------------------------------

std::string local_name(std::string_view iri) {
  const std::size_t cut = iri.find_last_of("#/:");
  return std::string(cut == std::string_view::npos ? iri : iri.substr(cut + 1));
}

class OwlReader {
 public:
  OwlImport read(std::string_view document) {
    const xml::Element root = xml::parse(document);
    if (!root.is(kRdf, "RDF")) {
      throw Error(ErrorCode::kInvalid, "line " + std::to_string(root.line) +
                                           ": root element <" + root.qname +
                                           "> is not rdf:RDF");
    }
    const xml::Attribute *base = root.attribute(xml::kXmlNamespace, "base");
    base_ = base ? base->value : std::string();
    if (const std::size_t hash = base_.find('#'); hash != std::string::npos) base_.resize(hash);

    for (const xml::Element &child : root.children) {
      if (child.is(kOwl, "Class")) {
        read_class(child);
      } else if (child.is(kOwl, "Ontology")) {
        read_ontology(child);
      } else if (child.is(kOwl, "ObjectProperty")) {
        // Declarations of the relation properties carry no graph content.
      } else {
        warn(child, "ignored <" + child.qname + ">");
      }
    }

    // Typed edges are added after all classes are known so that forward
    // references keep their declared labels.
    for (const Pending &p : pending_) add_relation(p);
    return std::move(result_);
  }

 private:
  struct Pending {
    RelationType type;
    std::string from_iri;
    std::string to_iri;
    std::size_t line;
  };

  void warn(const xml::Element &at, const std::string &message) {
    result_.warnings.push_back("line " + std::to_string(at.line) + ": " + message);
  }

  std::string resolve(std::string_view reference) const {
    if (reference.starts_with('#')) {
      return (base_.empty() ? std::string(kDefaultBase) : base_) + std::string(reference);
    }
    return std::string(reference);
  }

  std::optional<std::string> subject_iri(const xml::Element &e) const {
    if (const auto *about = e.attribute(kRdf, "about")) return resolve(about->value);
    if (const auto *id = e.attribute(kRdf, "ID")) return resolve("#" + id->value);
    return std::nullopt;
  }

  // Named class referenced by rdf:resource or by a nested <owl:Class rdf:about>.
  std::optional<std::string> class_reference(const xml::Element &e) const {
    if (const auto *res = e.attribute(kRdf, "resource")) return resolve(res->value);
    if (e.children.size() == 1 && e.children.front().is(kOwl, "Class")) {
      return subject_iri(e.children.front());
    }
    return std::nullopt;
  }

  std::string &concept_for(const std::string &iri) {
    auto it = concept_ids_.find(iri);
    if (it != concept_ids_.end()) return it->second;
    std::string id = local_name(iri);
    if (id.empty()) id = "c";
    std::string candidate = id;
    for (std::size_t n = 2; used_ids_.contains(candidate); ++n) {
      candidate = id + "_" + std::to_string(n);
    }
    used_ids_.insert(candidate);
    result_.graph.concepts.push_back({candidate, local_name(iri), ConceptSource::kManual});
    return concept_ids_.emplace(iri, candidate).first->second;
  }

  void set_label(const std::string &id, std::string label, bool preferred) {
    if (label.empty()) return;
    for (Concept &c : result_.graph.concepts) {
      if (c.id != id) continue;
      if (preferred || !labelled_.contains(id)) c.label = std::move(label);
      if (preferred) preferred_.insert(id);
      labelled_.insert(id);
      return;
    }
  }

  void read_ontology(const xml::Element &e) {
    for (const xml::Element &child : e.children) {
      if (child.is(kRdfs, "label")) {
        if (result_.graph.name.empty()) result_.graph.name = child.text;
      } else {
        warn(child, "ignored ontology header <" + child.qname + ">");
      }
    }
  }

  void read_class(const xml::Element &e) {
    const auto iri = subject_iri(e);
    if (!iri) {
      warn(e, "ignored anonymous owl:Class");
      return;
    }
    const std::string id = concept_for(*iri);
    declared_.insert(id);
    for (const xml::Element &child : e.children) {
      if (child.is(kRdfs, "label")) {
        const auto *lang = child.attribute(xml::kXmlNamespace, "lang");
        const bool uk = lang && lang->value == "uk";
        if (!preferred_.contains(id)) set_label(id, child.text, uk);
      } else if (child.is(kRdfs, "subClassOf")) {
        read_superclass(*iri, child);
      } else {
        warn(child, "ignored <" + child.qname + "> in class " + id);
      }
    }
  }

  void read_superclass(const std::string &iri, const xml::Element &e) {
    if (auto target = class_reference(e)) {
      if (*target == std::string(kOwl) + "Thing") return;
      pending_.push_back({RelationType::kIsA, iri, *target, e.line});
      return;
    }
    if (e.children.size() != 1 || !e.children.front().is(kOwl, "Restriction")) {
      warn(e, "ignored unsupported rdfs:subClassOf");
      return;
    }
    const xml::Element &restriction = e.children.front();
    std::optional<std::string> property, filler;
    for (const xml::Element &part : restriction.children) {
      if (part.is(kOwl, "onProperty")) {
        if (const auto *res = part.attribute(kRdf, "resource")) property = resolve(res->value);
      } else if (part.is(kOwl, "someValuesFrom")) {
        filler = class_reference(part);
      } else {
        warn(part, "ignored restriction part <" + part.qname + ">");
      }
    }
    if (!property || !filler) {
      warn(restriction, "ignored restriction without onProperty/someValuesFrom");
      return;
    }
    const std::string name = local_name(*property);
    auto type = relation_for_property(name);
    if (!type) {
      warn(restriction, "unknown property '" + name + "', typed as associated");
      type = RelationType::kAssociated;
    }
    pending_.push_back({*type, iri, *filler, restriction.line});
  }

  void add_relation(const Pending &p) {
    const std::string from = concept_for(p.from_iri);
    const std::string to = concept_for(p.to_iri);
    if (!declared_.contains(to) && warned_undeclared_.insert(to).second) {
      result_.warnings.push_back("line " + std::to_string(p.line) + ": class " + to +
                                 " is referenced but not declared");
    }
    auto &graph = result_.graph;
    auto skip = [&](const std::string &why) {
      result_.warnings.push_back("line " + std::to_string(p.line) + ": skipped " +
                                 std::string(to_string(p.type)) + " " + from + " -> " + to +
                                 ": " + why);
    };
    if (from == to) return skip("self-reference");
    for (const Relation &r : graph.relations) {
      if (r.type == p.type && r.from == from && r.to == to) return skip("duplicate");
    }
    graph.relations.push_back(
        {"r" + std::to_string(graph.relations.size() + 1), p.type, from, to});
    if (p.type == RelationType::kIsA && !is_a_acyclic(graph)) {
      graph.relations.pop_back();
      skip("would close an is-a cycle");
    }
  }

  std::string base_;
  OwlImport result_;
  std::map<std::string, std::string> concept_ids_;
  std::set<std::string> used_ids_;
  std::set<std::string> declared_;
  std::set<std::string> labelled_;
  std::set<std::string> preferred_;
  std::set<std::string> warned_undeclared_;
  std::vector<Pending> pending_;
};

// ---- KVP reading -------------------------------------------------------

class KvpReader {
 public:
  OntologyGraph read(std::string_view document) {
    const xml::Element root = xml::parse(document);
    if (root.qname != "kvp-ontology") {
      fail(root, "expected root element <kvp-ontology>");
    }
    check_attributes(root, {"name"});
    graph_.name = required(root, "name");
    if (!blank(root.text)) fail(root, "unexpected character data");

    for (const xml::Element &e : root.children) {
      if (e.qname == "concept") {
        read_concept(e);
      } else if (e.qname == "relation") {
        relations_.push_back(&e);
      } else {
        fail(e, "unexpected element");
      }
    }
    for (const xml::Element *e : relations_) read_relation(*e);

    const ValidationReport report = validate(graph_);
    if (!report.empty()) {
      const Violation &v = report.front();
      for (const xml::Element *e : relations_) {
        const auto *id = e->attribute("id");
        if (id && std::find(v.ids.begin(), v.ids.end(), id->value) != v.ids.end()) {
          fail(*e, v.message);
        }
      }
      fail(root, v.message);
    }
    return graph_;
  }

 private:
  [[noreturn]] static void fail(const xml::Element &e, const std::string &message) {
    throw Error(ErrorCode::kInvalid, "line " + std::to_string(e.line) + ": <" + e.qname +
                                         ">: " + message);
  }

  static bool blank(std::string_view s) {
    return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
  }

  static void check_attributes(const xml::Element &e,
                               std::initializer_list<std::string_view> allowed) {
    for (const xml::Attribute &a : e.attributes) {
      if (std::find(allowed.begin(), allowed.end(), a.qname) == allowed.end()) {
        fail(e, "unexpected attribute " + a.qname);
      }
    }
  }

  static const std::string &required(const xml::Element &e, std::string_view name) {
    const xml::Attribute *a = e.attribute(name);
    if (!a) fail(e, "missing attribute " + std::string(name));
    return a->value;
  }

  void read_concept(const xml::Element &e) {
    if (!e.children.empty()) fail(e, "unexpected child element");
    check_attributes(e, {"id", "label"});
    const std::string &id = required(e, "id");
    static const std::regex kConceptId("c[1-9][0-9]*");
    if (!std::regex_match(id, kConceptId)) fail(e, "bad concept id '" + id + "'");
    if (graph_.find_concept(id)) fail(e, "duplicate concept id '" + id + "'");
    const std::string &label = required(e, "label");
    if (label.empty()) fail(e, "empty label");
    if (!blank(e.text)) fail(e, "unexpected character data");
    graph_.concepts.push_back({id, label, ConceptSource::kManual});
  }

  void read_relation(const xml::Element &e) {
    if (!e.children.empty()) fail(e, "unexpected child element");
    check_attributes(e, {"id", "type", "from", "to"});
    const std::string &id = required(e, "id");
    static const std::regex kRelationId("r[1-9][0-9]*");
    if (!std::regex_match(id, kRelationId)) fail(e, "bad relation id '" + id + "'");
    if (graph_.find_relation(id)) fail(e, "duplicate relation id '" + id + "'");
    const std::string &type_name = required(e, "type");
    const auto type = parse_relation_type(type_name);
    if (!type) fail(e, "unknown relation type '" + type_name + "'");
    const std::string &from = required(e, "from");
    const std::string &to = required(e, "to");
    for (const std::string *end : {&from, &to}) {
      if (!graph_.find_concept(*end)) fail(e, "unknown concept id '" + *end + "'");
    }
    if (!blank(e.text)) fail(e, "unexpected character data");
    graph_.relations.push_back({id, *type, from, to});
  }

  OntologyGraph graph_;
  std::vector<const xml::Element *> relations_;
};

}  // namespace

OwlImport parse_owl(std::string_view document) { return OwlReader().read(document); }

std::string emit_owl(const OntologyGraph &graph) {
  require_valid(graph, "OWL");
  std::vector<const Concept *> concepts;
  for (const Concept &c : graph.concepts) concepts.push_back(&c);
  std::sort(concepts.begin(), concepts.end(),
            [](const Concept *a, const Concept *b) { return id_less(a->id, b->id); });

  std::set<RelationType> used;
  for (const Relation &r : graph.relations) {
    if (r.type != RelationType::kIsA) used.insert(r.type);
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<rdf:RDF xmlns:rdf=\"";
  out += kRdf;
  out += "\"\n         xmlns:rdfs=\"";
  out += kRdfs;
  out += "\"\n         xmlns:owl=\"";
  out += kOwl;
  out += "\"\n         xml:base=\"";
  out += kDefaultBase;
  out += "\">\n";
  if (graph.name.empty()) {
    out += "  <owl:Ontology rdf:about=\"\"/>\n";
  } else {
    out += "  <owl:Ontology rdf:about=\"\">\n    <rdfs:label>";
    out += xml::escape_text(graph.name);
    out += "</rdfs:label>\n  </owl:Ontology>\n";
  }
  for (RelationType type : used) {
    out += "  <owl:ObjectProperty rdf:about=\"#";
    out += property_name(type);
    out += "\"/>\n";
  }
  for (const Concept *c : concepts) {
    out += "  <owl:Class rdf:about=\"#" + xml::escape_attribute(c->id) + "\">\n";
    out += "    <rdfs:label xml:lang=\"uk\">" + xml::escape_text(c->label) + "</rdfs:label>\n";
    std::vector<const Relation *> outgoing;
    for (const Relation &r : graph.relations) {
      if (r.from == c->id) outgoing.push_back(&r);
    }
    std::sort(outgoing.begin(), outgoing.end(), [](const Relation *a, const Relation *b) {
      if (a->type != b->type) return a->type < b->type;
      return id_less(a->to, b->to);
    });
    for (const Relation *r : outgoing) {
      const std::string target = "#" + xml::escape_attribute(r->to);
      if (r->type == RelationType::kIsA) {
        out += "    <rdfs:subClassOf rdf:resource=\"" + target + "\"/>\n";
        continue;
      }
      out += "    <rdfs:subClassOf>\n      <owl:Restriction>\n";
      out += "        <owl:onProperty rdf:resource=\"#";
      out += property_name(r->type);
      out += "\"/>\n";
      out += "        <owl:someValuesFrom rdf:resource=\"" + target + "\"/>\n";
      out += "      </owl:Restriction>\n    </rdfs:subClassOf>\n";
    }
    out += "  </owl:Class>\n";
  }
  out += "</rdf:RDF>\n";
  return out;
}

OntologyGraph canonicalize(const OntologyGraph &graph) {
  std::vector<std::size_t> order(graph.concepts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Concept &x = graph.concepts[a], &y = graph.concepts[b];
    const std::size_t lx = text::code_point_count(x.label), ly = text::code_point_count(y.label);
    if (lx != ly) return lx < ly;
    if (x.label != y.label) return x.label < y.label;
    if (x.id != y.id) return id_less(x.id, y.id);
    return a < b;
  });

  OntologyGraph out;
  out.name = graph.name;
  std::map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Concept c = graph.concepts[order[i]];
    rank.try_emplace(c.id, i + 1);
    c.id = "c" + std::to_string(i + 1);
    out.concepts.push_back(std::move(c));
  }

  struct Row {
    std::size_t from, to;
    RelationType type;
  };
  std::vector<Row> rows;
  for (const Relation &r : graph.relations) {
    auto f = rank.find(r.from), t = rank.find(r.to);
    if (f == rank.end() || t == rank.end()) {
      throw Error(ErrorCode::kInvalid, "unknown concept id in relation " + r.id);
    }
    rows.push_back({f->second, t->second, r.type});
  }
  std::sort(rows.begin(), rows.end(), [](const Row &a, const Row &b) {
    return std::tie(a.from, a.to, a.type) < std::tie(b.from, b.to, b.type);
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.relations.push_back({"r" + std::to_string(i + 1), rows[i].type,
                             "c" + std::to_string(rows[i].from),
                             "c" + std::to_string(rows[i].to)});
  }
  return out;
}

std::string emit_kvp(const OntologyGraph &graph) {
  require_valid(graph, "KVP");
  const OntologyGraph g = canonicalize(graph);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<kvp-ontology name=\"" + xml::escape_attribute(g.name) + "\">\n";
  for (const Concept &c : g.concepts) {
    out += "  <concept id=\"" + c.id + "\" label=\"" + xml::escape_attribute(c.label) + "\"/>\n";
  }
  for (const Relation &r : g.relations) {
    out += "  <relation id=\"" + r.id + "\" type=\"";
    out += to_string(r.type);
    out += "\" from=\"" + r.from + "\" to=\"" + r.to + "\"/>\n";
  }
  out += "</kvp-ontology>\n";
  return out;
}

OntologyGraph parse_kvp(std::string_view document) { return KvpReader().read(document); }

std::string convert_owl_to_kvp(std::string_view owl, std::vector<std::string> *warnings) {
  OwlImport imported = parse_owl(owl);
  if (warnings) {
    warnings->insert(warnings->end(), imported.warnings.begin(), imported.warnings.end());
  }
  return emit_kvp(imported.graph);
}

std::string convert_kvp_to_owl(std::string_view kvp) { return emit_owl(parse_kvp(kvp)); }

}  // namespace okb
