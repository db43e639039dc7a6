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

#ifndef ONTOMERGE_ONTOLOGY_H_
#define ONTOMERGE_ONTOLOGY_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontomerge {

// Origin recorded on entities created by the entity integrator.
inline constexpr std::string_view kMergedOrigin = "merged";

enum class EntityKind { kClass, kObjectProperty, kDataProperty, kInstance };

std::string_view entity_kind_name(EntityKind kind);

inline bool is_property(EntityKind kind) {
  return kind == EntityKind::kObjectProperty ||
         kind == EntityKind::kDataProperty;
}

// Entity identity is the IRI string alone.
struct EntityId {
  std::string iri;

  auto operator<=>(const EntityId&) const = default;
  bool operator==(const EntityId&) const = default;
};

// The part of an IRI after the last ':', '#' or '/'.
std::string local_name(std::string_view iri);

struct Entity {
  EntityId id;
  EntityKind kind = EntityKind::kClass;
  // Source ontology name, or kMergedOrigin for integrated entities.
  std::string origin;
  std::set<std::string> labels;
};

enum class AxiomKind {
  kSubClassOf,
  kDomain,
  kRange,
  kUnionOf,
  kInstanceOf,
  kSubPropertyOf,
};

std::string_view axiom_kind_name(AxiomKind kind);

// A closed-fragment axiom. `objects` has exactly one element except for
// kUnionOf, where it lists the (at least two) union members.
//
// Equality and ordering look at (kind, subject, objects) only, so the same
// statement contributed by two sources collapses to a single axiom.
struct Axiom {
  AxiomKind kind = AxiomKind::kSubClassOf;
  EntityId subject;
  std::vector<EntityId> objects;
  std::string provenance;
  bool translated = false;

  static Axiom sub_class_of(std::string sub, std::string super);
  static Axiom domain(std::string property, std::string cls);
  static Axiom range(std::string property, std::string cls);
  static Axiom union_of(std::string cls, std::vector<std::string> members);
  static Axiom instance_of(std::string instance, std::string cls);
  static Axiom sub_property_of(std::string sub, std::string super);

  bool mentions(const EntityId& id) const;

  // Calls `fn(const EntityId&)` for the subject, then every object.
  template <typename Fn>
  void for_each_participant(Fn&& fn) const {
    fn(subject);
    for (const EntityId& o : objects) fn(o);
  }

  bool operator==(const Axiom& other) const {
    return kind == other.kind && subject == other.subject &&
           objects == other.objects;
  }
  bool operator<(const Axiom& other) const {
    if (kind != other.kind) return kind < other.kind;
    if (subject != other.subject) return subject < other.subject;
    return objects < other.objects;
  }
};

// A named TBox fragment. Every mutation keeps the signature closed: an axiom
// can only be added when all its participants are declared, and removing an
// entity removes every axiom that mentions it.
class Ontology {
 public:
  Ontology() = default;
  explicit Ontology(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const std::map<EntityId, Entity>& entities() const { return entities_; }
  const std::set<Axiom>& axioms() const { return axioms_; }

  bool contains(const EntityId& id) const { return entities_.count(id) > 0; }
  const Entity* find(const EntityId& id) const;
  // Throws kUnknownEntity when `id` is not declared.
  const Entity& entity(const EntityId& id) const;

  // Throws kDuplicateDeclaration if the IRI is already declared.
  void add_entity(Entity entity);
  // Adds the entity, or unions its labels into an existing declaration of
  // the same kind. A kind clash throws kKindMismatch.
  void upsert_entity(const Entity& entity);
  void add_label(const EntityId& id, std::string label);

  // Validates participant kinds and closure; returns false when an equal
  // axiom is already present.
  bool add_axiom(Axiom axiom);
  bool remove_axiom(const Axiom& axiom);
  bool has_axiom(const Axiom& axiom) const { return axioms_.count(axiom) > 0; }

  // Removes the entity and cascades to the axioms mentioning it. Returns the
  // number of axioms removed.
  std::size_t remove_entity(const EntityId& id);

  std::size_t count(EntityKind kind) const;

 private:
  void check_axiom(const Axiom& axiom) const;

  std::string name_;
  std::map<EntityId, Entity> entities_;
  std::set<Axiom> axioms_;
};

std::set<EntityId> signature(const Ontology& ontology);

// Direct taxonomic neighbours of class `cls`: its direct superclasses and
// direct subclasses.
std::set<EntityId> taxonomic_neighbors(const Ontology& ontology,
                                       const EntityId& cls);

struct ConnectivityCounts {
  std::size_t taxonomic = 0;
  std::size_t non_taxonomic = 0;

  bool operator==(const ConnectivityCounts&) const = default;
};

// SubClassOf axioms mentioning `cls` in either position, and Domain, Range
// and UnionOf axioms mentioning it.
ConnectivityCounts connectivity_counts(const Ontology& ontology,
                                       const EntityId& cls);

// Precomputed adjacency for repeated neighbour and connectivity queries on
// large ontologies. Answers match the free functions above.
class AxiomIndex {
 public:
  explicit AxiomIndex(const Ontology& ontology);

  const std::vector<EntityId>& taxonomic_neighbors(const EntityId& cls) const;
  ConnectivityCounts counts(const EntityId& cls) const;

 private:
  struct Node {
    std::vector<EntityId> neighbors;
    ConnectivityCounts counts;
  };
  const Node& node(const EntityId& cls) const;

  std::map<EntityId, Node> nodes_;
};

}  // namespace ontomerge

template <>
struct std::hash<ontomerge::EntityId> {
  std::size_t operator()(const ontomerge::EntityId& id) const noexcept {
    return std::hash<std::string>{}(id.iri);
  }
};

#endif  // ONTOMERGE_ONTOLOGY_H_
