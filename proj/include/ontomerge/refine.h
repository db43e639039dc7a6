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

#ifndef ONTOMERGE_REFINE_H_
#define ONTOMERGE_REFINE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontomerge/init_merge.h"
#include "ontomerge/ontology.h"

namespace ontomerge {

// General merge requirements handled by the engine: entity preservation for
// classes (R1), properties (R2) and instances (R3), structure preservation
// (R7), property oneness (R15), class acyclicity (R16) and connectivity (R19).
enum class Rule { kR1, kR2, kR3, kR7, kR15, kR16, kR19 };

std::string_view rule_name(Rule rule);
std::optional<Rule> parse_rule(std::string_view text);
const std::set<Rule>& all_rules();

enum class Scope { kLocal, kGlobal };

std::string_view scope_name(Scope scope);

// One repair, with enough recorded to undo it.
struct RefinementAction {
  Rule rule = Rule::kR16;
  Scope scope = Scope::kGlobal;
  std::string description;
  std::vector<Entity> added_entities;
  std::vector<Axiom> added_axioms;
  std::vector<Axiom> removed_axioms;
};

void revert(Ontology& ontology, const RefinementAction& action);

struct RefinementConfig {
  std::set<Rule> enabled_rules = all_rules();
  bool apply_local = true;
  bool apply_global = true;

  bool enabled(Rule rule) const { return enabled_rules.count(rule) > 0; }
};

// What the preservation and connectivity rules compare against: the image
// of every source entity and of every source SubClassOf edge under
// `integrated_of`.
class PreservationContext {
 public:
  struct SourceEntity {
    EntityId image;
    EntityKind kind;
  };
  struct Edge {
    EntityId sub;
    EntityId super;

    auto operator<=>(const Edge&) const = default;
  };

  // `catalog` supplies entity records for re-insertion; it must outlive the
  // context and may be null when only measuring.
  PreservationContext(std::span<const Ontology> sources,
                      const std::map<EntityId, EntityId>& integrated_of,
                      const Ontology* catalog);

  const std::vector<SourceEntity>& entities() const { return entities_; }
  // One entry per source SubClassOf axiom whose two ends have distinct
  // images; edges collapsed into a single entity count as preserved.
  const std::vector<Edge>& edges() const { return edges_; }
  // Distinct image edges incident to `cls`, sorted.
  const std::vector<Edge>& edges_of(const EntityId& cls) const;
  const Entity* catalog_entity(const EntityId& image) const;

 private:
  std::vector<SourceEntity> entities_;
  std::vector<Edge> edges_;
  std::map<EntityId, std::vector<Edge>> incident_;
  const Ontology* catalog_;
};

struct PreservationReport {
  double class_coverage = 1.0;
  double property_coverage = 1.0;
  double instance_coverage = 1.0;
  std::size_t unpreserved_structures = 0;  // |str|
};

PreservationReport check_preservation(const Ontology& ontology,
                                      const PreservationContext& context);
// Convenience overload against the model's own integrated_of.
PreservationReport check_preservation(const MergeModel& model,
                                      std::span<const Ontology> sources);

// Properties with two or more domains or two or more ranges (|on|).
std::size_t count_oneness_violations(const Ontology& ontology);
// Classes without taxonomic edges that had one in a source (|C_u|).
std::size_t count_unconnected(const Ontology& ontology,
                              const PreservationContext& context);
// Elementary cycles of the class hierarchy, capped (|cyc|).
inline constexpr std::size_t kCycleCountCap = 1000;
std::size_t count_cycles(const Ontology& ontology, bool* capped = nullptr);

// Restricts a rule to one block: only classes in `scope_classes` and the
// source edges between them are considered. Null means the whole ontology.
using ScopeClasses = const std::set<EntityId>*;

struct RuleOutcome {
  std::vector<RefinementAction> actions;
  // Repairs skipped because they would close a cycle.
  std::size_t acyclicity_conflicts = 0;
};

// R1/R2/R3 and R7. Re-inserts missing entity images and re-adds the image of
// every unpreserved source edge unless that edge would close a cycle.
RuleOutcome repair_preservation(Ontology& ontology,
                                const PreservationContext& context,
                                const std::set<Rule>& rules, Scope scope,
                                ScopeClasses scope_classes = nullptr);

// R15. Replaces multiple domains (ranges) of a property by one domain
// (range) on the class `union:<property>:dom` (`:rng`), defined as the
// union of the originals.
RuleOutcome repair_oneness(Ontology& ontology, Scope scope);

// R16. Breaks cycles one edge at a time, removing a translated edge when
// the cycle has one, else the lexicographically greatest (sub, super).
RuleOutcome repair_acyclicity(Ontology& ontology, Scope scope);

// R19. Reattaches each class that lost all taxonomic edges through the
// first of its source edges that does not close a cycle.
RuleOutcome repair_connectivity(Ontology& ontology,
                                const PreservationContext& context,
                                Scope scope,
                                ScopeClasses scope_classes = nullptr);

inline constexpr int kMaxRefinementPasses = 10;

struct RefinementOutcome {
  std::vector<RefinementAction> actions;
  std::size_t acyclicity_conflicts = 0;
  int passes = 0;
};

// Runs the enabled rules in the order R16, R19, R15, R1-R3/R7 until a pass
// makes no change. Throws kNonConvergence after kMaxRefinementPasses.
// Returns no actions when `scope` is disabled in `config`.
RefinementOutcome apply(const RefinementConfig& config, Scope scope,
                        Ontology& ontology, const PreservationContext& context,
                        ScopeClasses scope_classes = nullptr);

}  // namespace ontomerge

#endif  // ONTOMERGE_REFINE_H_
