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

#include "okb/ontology.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "okb/error.h"

namespace okb {

namespace {

constexpr std::array<std::string_view, 5> kRelationNames = {"is-a", "object", "part-of",
                                                            "attribute", "associated"};
constexpr std::array<std::string_view, 2> kSourceNames = {"extracted", "manual"};

// Largest N over ids "<prefix>N".
std::size_t max_suffix(char prefix, const std::vector<std::string> &ids) {
  std::size_t best = 0;
  for (const std::string &id : ids) {
    if (id.size() < 2 || id[0] != prefix) continue;
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), value);
    if (ec == std::errc() && ptr == id.data() + id.size()) best = std::max(best, value);
  }
  return best;
}

std::string next_concept_id(const OntologyGraph &g) {
  std::vector<std::string> ids;
  for (const Concept &c : g.concepts) ids.push_back(c.id);
  return "c" + std::to_string(max_suffix('c', ids) + 1);
}

std::string next_relation_id(const OntologyGraph &g) {
  std::vector<std::string> ids;
  for (const Relation &r : g.relations) ids.push_back(r.id);
  return "r" + std::to_string(max_suffix('r', ids) + 1);
}

// Tarjan's algorithm over IS_A edges; returns components with > 1 member.
std::vector<std::vector<std::string>> is_a_cycles(const OntologyGraph &g) {
  std::unordered_map<std::string, std::size_t> index_of;
  for (const Concept &c : g.concepts) index_of.try_emplace(c.id, index_of.size());
  const std::size_t n = index_of.size();
  std::vector<std::string> names(n);
  for (const auto &[id, i] : index_of) names[i] = id;

  std::vector<std::vector<std::size_t>> adj(n);
  for (const Relation &r : g.relations) {
    if (r.type != RelationType::kIsA || r.from == r.to) continue;
    auto a = index_of.find(r.from), b = index_of.find(r.to);
    if (a == index_of.end() || b == index_of.end()) continue;
    adj[a->second].push_back(b->second);
  }

  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  std::vector<std::vector<std::string>> cycles;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : adj[v]) {
      if (index[w] == kUnvisited) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] != index[v]) return;
    std::vector<std::string> component;
    while (true) {
      const std::size_t w = stack.back();
      stack.pop_back();
      on_stack[w] = false;
      component.push_back(names[w]);
      if (w == v) break;
    }
    if (component.size() > 1) {
      std::sort(component.begin(), component.end(), id_less);
      cycles.push_back(std::move(component));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == kUnvisited) visit(v);
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::string join_ids(const std::vector<std::string> &ids) {
  std::string out;
  for (const std::string &id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

std::string_view to_string(ConceptSource source) {
  return kSourceNames[static_cast<std::size_t>(source)];
}

std::optional<ConceptSource> parse_concept_source(std::string_view s) {
  for (std::size_t i = 0; i < kSourceNames.size(); ++i) {
    if (kSourceNames[i] == s) return static_cast<ConceptSource>(i);
  }
  return std::nullopt;
}

std::string_view to_string(RelationType type) {
  return kRelationNames[static_cast<std::size_t>(type)];
}

std::optional<RelationType> parse_relation_type(std::string_view s) {
  for (std::size_t i = 0; i < kRelationNames.size(); ++i) {
    if (kRelationNames[i] == s) return static_cast<RelationType>(i);
  }
  return std::nullopt;
}

const Concept *OntologyGraph::find_concept(std::string_view id) const {
  for (const Concept &c : concepts) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const Relation *OntologyGraph::find_relation(std::string_view id) const {
  for (const Relation &r : relations) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

ValidationReport validate(const OntologyGraph &graph) {
  ValidationReport report;
  using Kind = Violation::Kind;

  std::unordered_set<std::string> concept_ids;
  for (const Concept &c : graph.concepts) {
    if (c.label.empty()) {
      report.push_back({Kind::kEmptyLabel, "concept " + c.id + " has an empty label", {c.id}});
    }
    if (c.id.empty() || !concept_ids.insert(c.id).second) {
      report.push_back(
          {Kind::kDuplicateConceptId, "duplicate concept id '" + c.id + "'", {c.id}});
    }
  }

  std::unordered_set<std::string> relation_ids;
  std::set<std::tuple<RelationType, std::string, std::string>> triples;
  for (const Relation &r : graph.relations) {
    if (r.id.empty() || !relation_ids.insert(r.id).second) {
      report.push_back(
          {Kind::kDuplicateRelationId, "duplicate relation id '" + r.id + "'", {r.id}});
    }
    for (const std::string *end : {&r.from, &r.to}) {
      if (!concept_ids.contains(*end)) {
        report.push_back({Kind::kDanglingEndpoint,
                          "relation " + r.id + " references missing concept '" + *end + "'",
                          {r.id, *end}});
      }
    }
    if (r.from == r.to) {
      report.push_back({Kind::kSelfLoop, "relation " + r.id + " is a self-loop", {r.id}});
    }
    if (!triples.insert({r.type, r.from, r.to}).second) {
      report.push_back({Kind::kDuplicateRelation,
                        "duplicate " + std::string(to_string(r.type)) + " relation " +
                            r.from + " -> " + r.to,
                        {r.id}});
    }
  }

  for (auto &cycle : is_a_cycles(graph)) {
    report.push_back({Kind::kIsACycle, "is-a cycle through " + join_ids(cycle), cycle});
  }
  return report;
}

bool is_a_acyclic(const OntologyGraph &graph) {
  std::unordered_map<std::string, std::size_t> index_of;
  for (const Concept &c : graph.concepts) index_of.try_emplace(c.id, index_of.size());
  const std::size_t n = index_of.size();
  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<std::size_t> in_degree(n, 0);
  for (const Relation &r : graph.relations) {
    if (r.type != RelationType::kIsA) continue;
    auto a = index_of.find(r.from), b = index_of.find(r.to);
    if (a == index_of.end() || b == index_of.end()) continue;
    adj[a->second].push_back(b->second);
    ++in_degree[b->second];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (in_degree[v] == 0) ready.push_back(v);
  }
  std::size_t sorted = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++sorted;
    for (std::size_t w : adj[v]) {
      if (--in_degree[w] == 0) ready.push_back(w);
    }
  }
  return sorted == n;
}

OntologyGraph build_draft(std::span<const Term> selection,
                          std::span<const SentenceAnalysis> analyses, std::string name) {
  if (selection.empty()) throw Error(ErrorCode::kInvalid, "nothing selected");

  OntologyGraph graph;
  graph.name = std::move(name);

  std::map<std::pair<std::vector<std::string>, TermKind>, std::string> concept_of;
  for (const Term &term : selection) {
    const std::string id = "c" + std::to_string(graph.concepts.size() + 1);
    graph.concepts.push_back({id, term.label(), ConceptSource::kExtracted});
    concept_of.try_emplace({term.key, term.kind}, id);
  }

  std::set<std::tuple<RelationType, std::string, std::string>> seen;
  auto add = [&](RelationType type, const std::string &from, const std::string &to) {
    if (from == to || !seen.insert({type, from, to}).second) return;
    graph.relations.push_back({next_relation_id(graph), type, from, to});
  };

  for (const Term &term : selection) {
    if (term.kind != TermKind::kMulti) continue;
    const std::string &head = term.key[head_position(term.pattern)];
    auto it = concept_of.find({{head}, TermKind::kSingle});
    if (it != concept_of.end()) add(RelationType::kIsA, concept_of.at({term.key, term.kind}), it->second);
  }

  // Unordered co-occurring pairs, collected before typed edges are known.
  std::set<std::pair<std::string, std::string>> cooccurring;
  for (const SentenceAnalysis &a : analyses) {
    struct Hit {
      const TermOccurrence *occ;
      std::string concept_id;
    };
    std::vector<Hit> hits;
    for (const TermOccurrence &occ : a.occurrences) {
      auto it = concept_of.find({occ.lemmas, kind_of(occ.pattern)});
      if (it != concept_of.end()) hits.push_back({&occ, it->second});
    }
    if (hits.empty()) continue;

    // Longest selected occurrence headed by each token.
    std::map<std::size_t, const Hit *> headed;
    for (const Hit &h : hits) {
      auto [it, inserted] = headed.try_emplace(h.occ->head, &h);
      const TermOccurrence *cur = it->second->occ;
      if (!inserted && h.occ->end - h.occ->begin > cur->end - cur->begin) it->second = &h;
    }
    auto inside = [](std::size_t token, const TermOccurrence &occ) {
      return token >= occ.begin && token < occ.end;
    };

    for (const DependencyLink &l : a.links) {
      if (l.relation == LinkType::kPossessive) {
        auto from = headed.find(l.head), to = headed.find(l.dependent);
        if (from == headed.end() || to == headed.end()) continue;
        if (inside(l.dependent, *from->second->occ) || inside(l.head, *to->second->occ)) continue;
        add(RelationType::kPartOf, from->second->concept_id, to->second->concept_id);
      } else if (l.relation == LinkType::kObjective) {
        auto to = headed.find(l.dependent);
        if (to == headed.end()) continue;
        for (std::size_t k = l.head; k-- > 0;) {
          const TaggedToken &t = a.tagged[k];
          if (!t.is(Pos::kNoun) || t.features.grammatical_case != Case::kNom) continue;
          auto from = headed.find(k);
          if (from != headed.end()) {
            add(RelationType::kObject, from->second->concept_id, to->second->concept_id);
          }
          break;
        }
      }
    }

    for (std::size_t i = 0; i < hits.size(); ++i) {
      for (std::size_t j = i + 1; j < hits.size(); ++j) {
        const TermOccurrence &x = *hits[i].occ, &y = *hits[j].occ;
        if (hits[i].concept_id == hits[j].concept_id) continue;
        if (x.begin < y.end && y.begin < x.end) continue;
        cooccurring.insert(std::minmax(hits[i].concept_id, hits[j].concept_id));
      }
    }
  }

  auto connected = [&](const std::string &a, const std::string &b) {
    return std::any_of(graph.relations.begin(), graph.relations.end(), [&](const Relation &r) {
      return (r.from == a && r.to == b) || (r.from == b && r.to == a);
    });
  };
  auto label_of = [&](const std::string &id) -> const std::string & {
    return graph.find_concept(id)->label;
  };
  std::vector<std::pair<std::string, std::string>> associated;
  for (const auto &[a, b] : cooccurring) {
    if (connected(a, b)) continue;
    const bool swap = label_of(b) < label_of(a) || (label_of(b) == label_of(a) && id_less(b, a));
    associated.emplace_back(swap ? b : a, swap ? a : b);
  }
  std::sort(associated.begin(), associated.end(), [&](const auto &x, const auto &y) {
    return std::tie(label_of(x.first), label_of(x.second)) <
           std::tie(label_of(y.first), label_of(y.second));
  });
  for (const auto &[from, to] : associated) add(RelationType::kAssociated, from, to);
  return graph;
}

OntologyGraph apply_edit(const OntologyGraph &graph, const Edit &edit) {
  OntologyGraph next = graph;
  auto require_concept = [&](const std::string &id) {
    if (!next.find_concept(id)) throw Error(ErrorCode::kNotFound, "no such concept '" + id + "'");
  };

  std::visit(
      [&](const auto &e) {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, edit::AddConcept>) {
          const std::string id = e.id ? *e.id : next_concept_id(next);
          if (next.find_concept(id)) {
            throw Error(ErrorCode::kInvalid, "duplicate concept id '" + id + "'");
          }
          if (e.label.empty()) throw Error(ErrorCode::kInvalid, "concept label is empty");
          next.concepts.push_back({id, e.label, e.source});
        } else if constexpr (std::is_same_v<E, edit::RenameConcept>) {
          require_concept(e.id);
          if (e.label.empty()) throw Error(ErrorCode::kInvalid, "concept label is empty");
          for (Concept &c : next.concepts) {
            if (c.id == e.id) c.label = e.label;
          }
        } else if constexpr (std::is_same_v<E, edit::RemoveConcept>) {
          require_concept(e.id);
          std::erase_if(next.concepts, [&](const Concept &c) { return c.id == e.id; });
          std::erase_if(next.relations,
                        [&](const Relation &r) { return r.from == e.id || r.to == e.id; });
        } else if constexpr (std::is_same_v<E, edit::AddRelation>) {
          require_concept(e.from);
          require_concept(e.to);
          if (e.from == e.to) throw Error(ErrorCode::kInvalid, "relation endpoints are equal");
          const std::string id = e.id ? *e.id : next_relation_id(next);
          if (next.find_relation(id)) {
            throw Error(ErrorCode::kInvalid, "duplicate relation id '" + id + "'");
          }
          for (const Relation &r : next.relations) {
            if (r.type == e.type && r.from == e.from && r.to == e.to) {
              throw Error(ErrorCode::kInvalid, "relation already exists as " + r.id);
            }
          }
          next.relations.push_back({id, e.type, e.from, e.to});
          if (e.type == RelationType::kIsA && !is_a_acyclic(next)) {
            throw Error(ErrorCode::kInvalid,
                        "is-a " + e.from + " -> " + e.to + " would close a cycle");
          }
        } else if constexpr (std::is_same_v<E, edit::RemoveRelation>) {
          if (!next.find_relation(e.id)) {
            throw Error(ErrorCode::kNotFound, "no such relation '" + e.id + "'");
          }
          std::erase_if(next.relations, [&](const Relation &r) { return r.id == e.id; });
        }
      },
      edit);

  const ValidationReport report = validate(next);
  if (!report.empty()) throw Error(ErrorCode::kInvalid, report.front().message);
  return next;
}

}  // namespace okb
