// Copyright 2026 The OntoMerge Authors
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

#include "ontomerge/refine.h"

#include <algorithm>
#include <cctype>
#include <tuple>
#include <utility>

#include "ontomerge/error.h"
#include "ontomerge/taxonomy.h"

namespace ontomerge {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::kR1: return "R1";
    case Rule::kR2: return "R2";
    case Rule::kR3: return "R3";
    case Rule::kR7: return "R7";
    case Rule::kR15: return "R15";
    case Rule::kR16: return "R16";
    case Rule::kR19: return "R19";
  }
  return "R?";
}

std::optional<Rule> parse_rule(std::string_view text) {
  std::string upper;
  for (char c : text) {
    upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  for (Rule r : all_rules()) {
    if (rule_name(r) == upper) return r;
  }
  return std::nullopt;
}

const std::set<Rule>& all_rules() {
  static const auto* rules = new std::set<Rule>{
      Rule::kR1, Rule::kR2, Rule::kR3, Rule::kR7,
      Rule::kR15, Rule::kR16, Rule::kR19};
  return *rules;
}

std::string_view scope_name(Scope scope) {
  return scope == Scope::kLocal ? "local" : "global";
}

void revert(Ontology& ontology, const RefinementAction& action) {
  for (const Axiom& a : action.added_axioms) ontology.remove_axiom(a);
  for (const Entity& e : action.added_entities) ontology.remove_entity(e.id);
  for (const Axiom& a : action.removed_axioms) ontology.add_axiom(a);
}

namespace {

constexpr std::string_view kRefinementProvenance = "refinement";

const EntityId& image_of(const std::map<EntityId, EntityId>& integrated_of,
                         const EntityId& id) {
  auto it = integrated_of.find(id);
  return it == integrated_of.end() ? id : it->second;
}

bool in_scope(ScopeClasses scope, const EntityId& id) {
  return scope == nullptr || scope->count(id) > 0;
}

}  // namespace

PreservationContext::PreservationContext(
    std::span<const Ontology> sources,
    const std::map<EntityId, EntityId>& integrated_of, const Ontology* catalog)
    : catalog_(catalog) {
  std::set<EntityId> seen;
  for (const Ontology& o : sources) {
    for (const auto& [id, entity] : o.entities()) {
      if (seen.insert(id).second) {
        entities_.push_back({image_of(integrated_of, id), entity.kind});
      }
    }
  }
  std::set<Edge> distinct;
  for (const Ontology& o : sources) {
    for (const Axiom& a : o.axioms()) {
      if (a.kind != AxiomKind::kSubClassOf) continue;
      Edge e{image_of(integrated_of, a.subject),
             image_of(integrated_of, a.objects[0])};
      if (e.sub == e.super) continue;
      distinct.insert(e);
      edges_.push_back(std::move(e));
    }
  }
  for (const Edge& e : distinct) {
    incident_[e.sub].push_back(e);
    incident_[e.super].push_back(e);
  }
}

const std::vector<PreservationContext::Edge>& PreservationContext::edges_of(
    const EntityId& cls) const {
  static const std::vector<Edge> kEmpty;
  auto it = incident_.find(cls);
  return it == incident_.end() ? kEmpty : it->second;
}

const Entity* PreservationContext::catalog_entity(const EntityId& image) const {
  return catalog_ == nullptr ? nullptr : catalog_->find(image);
}

namespace {

double ratio(std::size_t hit, std::size_t total) {
  return total == 0 ? 1.0
                    : static_cast<double>(hit) / static_cast<double>(total);
}

// Marks the vertices reachable from `from` with `stamp`.
void mark_reachable(const ClassGraph& g, ClassGraph::Vertex from,
                    std::vector<std::size_t>& marks, std::size_t stamp,
                    std::vector<ClassGraph::Vertex>& stack) {
  stack.clear();
  stack.push_back(from);
  marks[from] = stamp;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : g.supers(v)) {
      if (marks[w] != stamp) {
        marks[w] = stamp;
        stack.push_back(w);
      }
    }
  }
}

// Source edges, grouped by sub, whose image has no path in `g`. Edges with
// an end missing from the graph are unpreserved too.
template <typename EdgeRange>
std::vector<const PreservationContext::Edge*> unpreserved_edges(
    const ClassGraph& g, const EdgeRange& edges) {
  std::vector<const PreservationContext::Edge*> sorted;
  for (const auto& e : edges) sorted.push_back(&e);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto* a, const auto* b) { return a->sub < b->sub; });
  std::vector<const PreservationContext::Edge*> missing;
  std::vector<std::size_t> marks(g.size(), 0);
  std::vector<ClassGraph::Vertex> stack;
  std::size_t stamp = 0;
  const EntityId* current = nullptr;
  std::optional<ClassGraph::Vertex> current_vertex;
  for (const auto* e : sorted) {
    if (current == nullptr || *current != e->sub) {
      current = &e->sub;
      current_vertex = g.vertex(e->sub);
      if (current_vertex) mark_reachable(g, *current_vertex, marks, ++stamp, stack);
    }
    auto super = g.vertex(e->super);
    if (!current_vertex || !super || marks[*super] != stamp) {
      missing.push_back(e);
    }
  }
  return missing;
}

}  // namespace

PreservationReport check_preservation(const Ontology& ontology,
                                      const PreservationContext& context) {
  std::size_t total[3] = {0, 0, 0};
  std::size_t present[3] = {0, 0, 0};
  for (const auto& e : context.entities()) {
    int slot = e.kind == EntityKind::kClass       ? 0
               : e.kind == EntityKind::kInstance  ? 2
                                                  : 1;
    ++total[slot];
    if (ontology.contains(e.image)) ++present[slot];
  }
  PreservationReport report;
  report.class_coverage = ratio(present[0], total[0]);
  report.property_coverage = ratio(present[1], total[1]);
  report.instance_coverage = ratio(present[2], total[2]);
  ClassGraph g(ontology);
  report.unpreserved_structures = unpreserved_edges(g, context.edges()).size();
  return report;
}

PreservationReport check_preservation(const MergeModel& model,
                                      std::span<const Ontology> sources) {
  PreservationContext context(sources, model.integrated_of, nullptr);
  return check_preservation(model.ontology, context);
}

std::size_t count_oneness_violations(const Ontology& ontology) {
  std::map<EntityId, std::pair<std::size_t, std::size_t>> counts;
  for (const Axiom& a : ontology.axioms()) {
    if (a.kind == AxiomKind::kDomain) ++counts[a.subject].first;
    if (a.kind == AxiomKind::kRange) ++counts[a.subject].second;
  }
  return static_cast<std::size_t>(
      std::count_if(counts.begin(), counts.end(), [](const auto& kv) {
        return kv.second.first >= 2 || kv.second.second >= 2;
      }));
}

std::size_t count_unconnected(const Ontology& ontology,
                              const PreservationContext& context) {
  ClassGraph g(ontology);
  std::size_t count = 0;
  for (ClassGraph::Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 0 && !context.edges_of(g.id(v)).empty()) ++count;
  }
  return count;
}

std::size_t count_cycles(const Ontology& ontology, bool* capped) {
  return ClassGraph(ontology).count_elementary_cycles(kCycleCountCap, capped);
}

RuleOutcome repair_preservation(Ontology& ontology,
                                const PreservationContext& context,
                                const std::set<Rule>& rules, Scope scope,
                                ScopeClasses scope_classes) {
  RuleOutcome outcome;
  for (const auto& e : context.entities()) {
    Rule rule = e.kind == EntityKind::kClass      ? Rule::kR1
                : e.kind == EntityKind::kInstance ? Rule::kR3
                                                  : Rule::kR2;
    if (rules.count(rule) == 0 || ontology.contains(e.image)) continue;
    if (scope_classes != nullptr &&
        (e.kind != EntityKind::kClass || scope_classes->count(e.image) == 0)) {
      continue;
    }
    Entity restored;
    if (const Entity* known = context.catalog_entity(e.image)) {
      restored = *known;
    } else {
      restored.id = e.image;
      restored.kind = e.kind;
      restored.origin = std::string(kRefinementProvenance);
      restored.labels.insert(local_name(e.image.iri));
    }
    RefinementAction action;
    action.rule = rule;
    action.scope = scope;
    action.description = "restored missing " +
                         std::string(entity_kind_name(e.kind)) + " " +
                         e.image.iri;
    action.added_entities.push_back(restored);
    ontology.add_entity(std::move(restored));
    outcome.actions.push_back(std::move(action));
  }

  if (rules.count(Rule::kR7) == 0) return outcome;
  ClassGraph g(ontology);
  std::set<PreservationContext::Edge> candidates;
  for (const auto& e : context.edges()) {
    if (in_scope(scope_classes, e.sub) && in_scope(scope_classes, e.super) &&
        g.vertex(e.sub) && g.vertex(e.super)) {
      candidates.insert(e);
    }
  }
  for (const auto* e : unpreserved_edges(g, candidates)) {
    auto sub = *g.vertex(e->sub);
    auto super = *g.vertex(e->super);
    if (g.reachable(sub, super)) continue;
    if (g.reachable(super, sub)) {
      ++outcome.acyclicity_conflicts;
      continue;
    }
    Axiom axiom = Axiom::sub_class_of(e->sub.iri, e->super.iri);
    axiom.provenance = std::string(kRefinementProvenance);
    axiom.translated = true;
    RefinementAction action;
    action.rule = Rule::kR7;
    action.scope = scope;
    action.description =
        "re-added source edge " + e->sub.iri + " < " + e->super.iri;
    action.added_axioms.push_back(axiom);
    ontology.add_axiom(std::move(axiom));
    g.add_edge(sub, super);
    outcome.actions.push_back(std::move(action));
  }
  return outcome;
}

RuleOutcome repair_oneness(Ontology& ontology, Scope scope) {
  std::map<EntityId, std::vector<EntityId>> domains, ranges;
  std::map<EntityId, std::vector<Axiom>> unions;
  for (const Axiom& a : ontology.axioms()) {
    if (a.kind == AxiomKind::kDomain) domains[a.subject].push_back(a.objects[0]);
    if (a.kind == AxiomKind::kRange) ranges[a.subject].push_back(a.objects[0]);
    if (a.kind == AxiomKind::kUnionOf) unions[a.subject].push_back(a);
  }

  RuleOutcome outcome;
  auto repair = [&](const EntityId& property, bool is_domain,
                    const std::vector<EntityId>& targets) {
    EntityId u{"union:" + property.iri + (is_domain ? ":dom" : ":rng")};
    const std::vector<Axiom>& definitions = unions[u];
    bool needed = targets.size() >= 2 ||
                  (targets.size() == 1 && targets[0] == u &&
                   definitions.size() >= 2);
    if (!needed) return;

    std::set<EntityId> members;
    for (const EntityId& t : targets) {
      if (t == u) {
        for (const Axiom& d : definitions) {
          members.insert(d.objects.begin(), d.objects.end());
        }
      } else {
        members.insert(t);
      }
    }
    members.erase(u);
    if (members.size() < 2) return;

    RefinementAction action;
    action.rule = Rule::kR15;
    action.scope = scope;
    action.description = std::string(is_domain ? "domains" : "ranges") +
                         " of " + property.iri + " unified into " + u.iri;
    for (const EntityId& t : targets) {
      Axiom old = is_domain ? Axiom::domain(property.iri, t.iri)
                            : Axiom::range(property.iri, t.iri);
      auto it = ontology.axioms().find(old);
      if (it != ontology.axioms().end()) {
        action.removed_axioms.push_back(*it);
        ontology.remove_axiom(old);
      }
    }
    for (const Axiom& d : definitions) {
      action.removed_axioms.push_back(d);
      ontology.remove_axiom(d);
    }
    if (!ontology.contains(u)) {
      Entity cls;
      cls.id = u;
      cls.kind = EntityKind::kClass;
      cls.origin = std::string(kMergedOrigin);
      cls.labels.insert(local_name(property.iri) +
                        (is_domain ? " domain" : " range"));
      action.added_entities.push_back(cls);
      ontology.add_entity(std::move(cls));
    }
    std::vector<std::string> member_iris;
    for (const EntityId& m : members) member_iris.push_back(m.iri);
    Axiom definition = Axiom::union_of(u.iri, std::move(member_iris));
    Axiom restriction = is_domain ? Axiom::domain(property.iri, u.iri)
                                  : Axiom::range(property.iri, u.iri);
    for (Axiom* a : {&definition, &restriction}) {
      a->provenance = std::string(kRefinementProvenance);
      action.added_axioms.push_back(*a);
      ontology.add_axiom(*a);
    }
    outcome.actions.push_back(std::move(action));
  };

  for (const auto& [property, targets] : domains) repair(property, true, targets);
  for (const auto& [property, targets] : ranges) repair(property, false, targets);
  return outcome;
}

RuleOutcome repair_acyclicity(Ontology& ontology, Scope scope) {
  RuleOutcome outcome;
  ClassGraph g(ontology);
  while (true) {
    std::vector<ClassGraph::Vertex> cycle = g.find_cycle();
    if (cycle.empty()) break;
    const Axiom* victim = nullptr;
    std::pair<ClassGraph::Vertex, ClassGraph::Vertex> victim_edge;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto sub = cycle[i];
      auto super = cycle[(i + 1) % cycle.size()];
      auto it = ontology.axioms().find(
          Axiom::sub_class_of(g.id(sub).iri, g.id(super).iri));
      const Axiom* a = &*it;
      bool better =
          victim == nullptr || (a->translated && !victim->translated) ||
          (a->translated == victim->translated &&
           std::tie(a->subject, a->objects[0]) >
               std::tie(victim->subject, victim->objects[0]));
      if (better) {
        victim = a;
        victim_edge = {sub, super};
      }
    }
    RefinementAction action;
    action.rule = Rule::kR16;
    action.scope = scope;
    action.description = "removed cycle edge " + victim->subject.iri + " < " +
                         victim->objects[0].iri;
    action.removed_axioms.push_back(*victim);
    ontology.remove_axiom(action.removed_axioms.back());
    g.remove_edge(victim_edge.first, victim_edge.second);
    outcome.actions.push_back(std::move(action));
  }
  return outcome;
}

RuleOutcome repair_connectivity(Ontology& ontology,
                                const PreservationContext& context,
                                Scope scope, ScopeClasses scope_classes) {
  RuleOutcome outcome;
  ClassGraph g(ontology);
  for (ClassGraph::Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) != 0 || !in_scope(scope_classes, g.id(v))) continue;
    const auto& edges = context.edges_of(g.id(v));
    if (edges.empty()) continue;
    bool reattached = false;
    for (const auto& e : edges) {
      if (!in_scope(scope_classes, e.sub) ||
          !in_scope(scope_classes, e.super)) {
        continue;
      }
      auto sub = g.vertex(e.sub);
      auto super = g.vertex(e.super);
      if (!sub || !super || g.reachable(*super, *sub)) continue;
      Axiom axiom = Axiom::sub_class_of(e.sub.iri, e.super.iri);
      axiom.provenance = std::string(kRefinementProvenance);
      axiom.translated = true;
      RefinementAction action;
      action.rule = Rule::kR19;
      action.scope = scope;
      action.description = "reconnected " + g.id(v).iri + " via " +
                           e.sub.iri + " < " + e.super.iri;
      action.added_axioms.push_back(axiom);
      ontology.add_axiom(std::move(axiom));
      g.add_edge(*sub, *super);
      outcome.actions.push_back(std::move(action));
      reattached = true;
      break;
    }
    if (!reattached) ++outcome.acyclicity_conflicts;
  }
  return outcome;
}

RefinementOutcome apply(const RefinementConfig& config, Scope scope,
                        Ontology& ontology, const PreservationContext& context,
                        ScopeClasses scope_classes) {
  RefinementOutcome outcome;
  bool permitted =
      scope == Scope::kLocal ? config.apply_local : config.apply_global;
  if (!permitted) return outcome;

  std::set<Rule> preservation;
  for (Rule r : {Rule::kR1, Rule::kR2, Rule::kR3, Rule::kR7}) {
    if (config.enabled(r)) preservation.insert(r);
  }

  std::set<Rule> last_active;
  for (int pass = 1; pass <= kMaxRefinementPasses; ++pass) {
    std::vector<RuleOutcome> results;
    if (config.enabled(Rule::kR16)) {
      results.push_back(repair_acyclicity(ontology, scope));
    }
    if (config.enabled(Rule::kR19)) {
      results.push_back(
          repair_connectivity(ontology, context, scope, scope_classes));
    }
    if (config.enabled(Rule::kR15)) {
      results.push_back(repair_oneness(ontology, scope));
    }
    if (!preservation.empty()) {
      results.push_back(repair_preservation(ontology, context, preservation,
                                            scope, scope_classes));
    }
    outcome.passes = pass;
    outcome.acyclicity_conflicts = 0;
    last_active.clear();
    bool changed = false;
    for (RuleOutcome& r : results) {
      outcome.acyclicity_conflicts += r.acyclicity_conflicts;
      for (RefinementAction& a : r.actions) {
        last_active.insert(a.rule);
        outcome.actions.push_back(std::move(a));
        changed = true;
      }
    }
    if (!changed) return outcome;
  }

  std::string rules;
  for (Rule r : last_active) {
    if (!rules.empty()) rules += "/";
    rules += rule_name(r);
  }
  throw Error(ErrorCode::kNonConvergence,
              std::string(scope_name(scope)) +
                  " refinement did not converge after " +
                  std::to_string(kMaxRefinementPasses) +
                  " passes; still active: " + rules);
}

}  // namespace ontomerge
