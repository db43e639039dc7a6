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

#include "ontomerge/ontology.h"

#include <algorithm>
#include <utility>

#include "ontomerge/error.h"

namespace ontomerge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kUnknownEntity: return "unknown-entity";
    case ErrorCode::kDuplicateDeclaration: return "duplicate-declaration";
    case ErrorCode::kKindMismatch: return "kind-mismatch";
    case ErrorCode::kDuplicateOntology: return "duplicate-ontology";
    case ErrorCode::kConfidenceRange: return "confidence-range";
    case ErrorCode::kNotIntegrated: return "not-integrated";
    case ErrorCode::kNonConvergence: return "non-convergence";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

std::string_view entity_kind_name(EntityKind kind) {
  switch (kind) {
    case EntityKind::kClass: return "class";
    case EntityKind::kObjectProperty: return "object-property";
    case EntityKind::kDataProperty: return "data-property";
    case EntityKind::kInstance: return "instance";
  }
  return "unknown";
}

std::string_view axiom_kind_name(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::kSubClassOf: return "SubClassOf";
    case AxiomKind::kDomain: return "Domain";
    case AxiomKind::kRange: return "Range";
    case AxiomKind::kUnionOf: return "UnionOf";
    case AxiomKind::kInstanceOf: return "InstanceOf";
    case AxiomKind::kSubPropertyOf: return "SubPropertyOf";
  }
  return "unknown";
}

std::string local_name(std::string_view iri) {
  auto pos = iri.find_last_of(":#/");
  if (pos == std::string_view::npos || pos + 1 == iri.size()) {
    return std::string(iri);
  }
  return std::string(iri.substr(pos + 1));
}

namespace {

Axiom make_axiom(AxiomKind kind, std::string subject,
                 std::vector<std::string> objects) {
  Axiom axiom;
  axiom.kind = kind;
  axiom.subject = EntityId{std::move(subject)};
  axiom.objects.reserve(objects.size());
  for (auto& o : objects) axiom.objects.push_back(EntityId{std::move(o)});
  return axiom;
}

}  // namespace

Axiom Axiom::sub_class_of(std::string sub, std::string super) {
  return make_axiom(AxiomKind::kSubClassOf, std::move(sub), {std::move(super)});
}
Axiom Axiom::domain(std::string property, std::string cls) {
  return make_axiom(AxiomKind::kDomain, std::move(property), {std::move(cls)});
}
Axiom Axiom::range(std::string property, std::string cls) {
  return make_axiom(AxiomKind::kRange, std::move(property), {std::move(cls)});
}
Axiom Axiom::union_of(std::string cls, std::vector<std::string> members) {
  return make_axiom(AxiomKind::kUnionOf, std::move(cls), std::move(members));
}
Axiom Axiom::instance_of(std::string instance, std::string cls) {
  return make_axiom(AxiomKind::kInstanceOf, std::move(instance),
                    {std::move(cls)});
}
Axiom Axiom::sub_property_of(std::string sub, std::string super) {
  return make_axiom(AxiomKind::kSubPropertyOf, std::move(sub),
                    {std::move(super)});
}

bool Axiom::mentions(const EntityId& id) const {
  return subject == id ||
         std::find(objects.begin(), objects.end(), id) != objects.end();
}

const Entity* Ontology::find(const EntityId& id) const {
  auto it = entities_.find(id);
  return it == entities_.end() ? nullptr : &it->second;
}

const Entity& Ontology::entity(const EntityId& id) const {
  const Entity* e = find(id);
  if (e == nullptr) {
    throw Error(ErrorCode::kUnknownEntity,
                "unknown entity '" + id.iri + "' in ontology '" + name_ + "'");
  }
  return *e;
}

void Ontology::add_entity(Entity entity) {
  if (entity.id.iri.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "entity with empty IRI");
  }
  if (entities_.count(entity.id) > 0) {
    throw Error(ErrorCode::kDuplicateDeclaration,
                "entity '" + entity.id.iri + "' declared twice in '" + name_ +
                    "'");
  }
  if (entity.labels.empty()) entity.labels.insert(local_name(entity.id.iri));
  EntityId key = entity.id;
  entities_.emplace(std::move(key), std::move(entity));
}

void Ontology::upsert_entity(const Entity& entity) {
  auto it = entities_.find(entity.id);
  if (it == entities_.end()) {
    add_entity(entity);
    return;
  }
  if (it->second.kind != entity.kind) {
    throw Error(ErrorCode::kKindMismatch,
                "entity '" + entity.id.iri + "' declared as both " +
                    std::string(entity_kind_name(it->second.kind)) + " and " +
                    std::string(entity_kind_name(entity.kind)));
  }
  it->second.labels.insert(entity.labels.begin(), entity.labels.end());
}

void Ontology::add_label(const EntityId& id, std::string label) {
  auto it = entities_.find(id);
  if (it == entities_.end()) entity(id);  // throws
  it->second.labels.insert(std::move(label));
}

void Ontology::check_axiom(const Axiom& axiom) const {
  auto require = [&](const EntityId& id, auto&& pred, std::string_view what) {
    const Entity& e = entity(id);
    if (!pred(e.kind)) {
      throw Error(ErrorCode::kKindMismatch,
                  std::string(axiom_kind_name(axiom.kind)) + " expects " +
                      std::string(what) + " but '" + id.iri + "' is a " +
                      std::string(entity_kind_name(e.kind)));
    }
  };
  auto is_class = [](EntityKind k) { return k == EntityKind::kClass; };
  auto is_prop = [](EntityKind k) { return is_property(k); };
  auto is_inst = [](EntityKind k) { return k == EntityKind::kInstance; };
  auto arity = [&](bool ok) {
    if (!ok) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(axiom_kind_name(axiom.kind)) + " on '" +
                      axiom.subject.iri + "' has wrong arity");
    }
  };

  switch (axiom.kind) {
    case AxiomKind::kSubClassOf:
      arity(axiom.objects.size() == 1);
      require(axiom.subject, is_class, "a class");
      require(axiom.objects[0], is_class, "a class");
      break;
    case AxiomKind::kDomain:
    case AxiomKind::kRange:
      arity(axiom.objects.size() == 1);
      require(axiom.subject, is_prop, "a property");
      require(axiom.objects[0], is_class, "a class");
      break;
    case AxiomKind::kUnionOf: {
      arity(axiom.objects.size() >= 2);
      require(axiom.subject, is_class, "a class");
      std::set<EntityId> seen;
      for (const EntityId& m : axiom.objects) {
        require(m, is_class, "a class");
        if (!seen.insert(m).second) {
          throw Error(ErrorCode::kInvalidArgument,
                      "UnionOf on '" + axiom.subject.iri +
                          "' repeats member '" + m.iri + "'");
        }
      }
      break;
    }
    case AxiomKind::kInstanceOf:
      arity(axiom.objects.size() == 1);
      require(axiom.subject, is_inst, "an instance");
      require(axiom.objects[0], is_class, "a class");
      break;
    case AxiomKind::kSubPropertyOf:
      arity(axiom.objects.size() == 1);
      require(axiom.subject, is_prop, "a property");
      require(axiom.objects[0], is_prop, "a property");
      break;
  }
  if ((axiom.kind == AxiomKind::kSubClassOf ||
       axiom.kind == AxiomKind::kSubPropertyOf) &&
      axiom.subject == axiom.objects[0]) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(axiom_kind_name(axiom.kind)) +
                    " is self-referential on '" + axiom.subject.iri + "'");
  }
}

bool Ontology::add_axiom(Axiom axiom) {
  check_axiom(axiom);
  return axioms_.insert(std::move(axiom)).second;
}

bool Ontology::remove_axiom(const Axiom& axiom) {
  return axioms_.erase(axiom) > 0;
}

std::size_t Ontology::remove_entity(const EntityId& id) {
  if (entities_.erase(id) == 0) return 0;
  std::size_t removed = 0;
  for (auto it = axioms_.begin(); it != axioms_.end();) {
    if (it->mentions(id)) {
      it = axioms_.erase(it);
      ++removed;
    } else {
      ++it;
    }
  }
  return removed;
}

std::size_t Ontology::count(EntityKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(entities_.begin(), entities_.end(),
                    [kind](const auto& kv) { return kv.second.kind == kind; }));
}

std::set<EntityId> signature(const Ontology& ontology) {
  std::set<EntityId> out;
  for (const auto& [id, entity] : ontology.entities()) out.insert(id);
  return out;
}

namespace {

const Entity& require_class(const Ontology& ontology, const EntityId& cls) {
  const Entity& e = ontology.entity(cls);
  if (e.kind != EntityKind::kClass) {
    throw Error(ErrorCode::kKindMismatch, "'" + cls.iri + "' is not a class");
  }
  return e;
}

bool is_non_taxonomic(AxiomKind kind) {
  return kind == AxiomKind::kDomain || kind == AxiomKind::kRange ||
         kind == AxiomKind::kUnionOf;
}

}  // namespace

std::set<EntityId> taxonomic_neighbors(const Ontology& ontology,
                                       const EntityId& cls) {
  require_class(ontology, cls);
  std::set<EntityId> out;
  for (const Axiom& a : ontology.axioms()) {
    if (a.kind != AxiomKind::kSubClassOf) continue;
    if (a.subject == cls) out.insert(a.objects[0]);
    if (a.objects[0] == cls) out.insert(a.subject);
  }
  return out;
}

ConnectivityCounts connectivity_counts(const Ontology& ontology,
                                       const EntityId& cls) {
  require_class(ontology, cls);
  ConnectivityCounts counts;
  for (const Axiom& a : ontology.axioms()) {
    if (!a.mentions(cls)) continue;
    if (a.kind == AxiomKind::kSubClassOf) {
      ++counts.taxonomic;
    } else if (is_non_taxonomic(a.kind)) {
      ++counts.non_taxonomic;
    }
  }
  return counts;
}

AxiomIndex::AxiomIndex(const Ontology& ontology) {
  for (const auto& [id, entity] : ontology.entities()) {
    if (entity.kind == EntityKind::kClass) nodes_.emplace(id, Node{});
  }
  for (const Axiom& a : ontology.axioms()) {
    if (a.kind == AxiomKind::kSubClassOf) {
      Node& sub = nodes_.at(a.subject);
      Node& super = nodes_.at(a.objects[0]);
      sub.neighbors.push_back(a.objects[0]);
      super.neighbors.push_back(a.subject);
      ++sub.counts.taxonomic;
      ++super.counts.taxonomic;
    } else if (is_non_taxonomic(a.kind)) {
      std::set<EntityId> touched;
      a.for_each_participant([&](const EntityId& id) {
        if (nodes_.count(id) > 0) touched.insert(id);
      });
      for (const EntityId& id : touched) ++nodes_.at(id).counts.non_taxonomic;
    }
  }
  for (auto& [id, node] : nodes_) {
    std::sort(node.neighbors.begin(), node.neighbors.end());
    node.neighbors.erase(
        std::unique(node.neighbors.begin(), node.neighbors.end()),
        node.neighbors.end());
  }
}

const AxiomIndex::Node& AxiomIndex::node(const EntityId& cls) const {
  auto it = nodes_.find(cls);
  if (it == nodes_.end()) {
    throw Error(ErrorCode::kUnknownEntity, "unknown class '" + cls.iri + "'");
  }
  return it->second;
}

const std::vector<EntityId>& AxiomIndex::taxonomic_neighbors(
    const EntityId& cls) const {
  return node(cls).neighbors;
}

ConnectivityCounts AxiomIndex::counts(const EntityId& cls) const {
  return node(cls).counts;
}

}  // namespace ontomerge
