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

#ifndef ONTOMERGE_CORRESPONDENCE_H_
#define ONTOMERGE_CORRESPONDENCE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ontomerge/io.h"
#include "ontomerge/ontology.h"

namespace ontomerge {

// A group of mutually corresponding entities (at least two), sorted by IRI.
struct CorrespondenceSet {
  std::vector<EntityId> members;
  EntityKind kind = EntityKind::kClass;

  bool operator==(const CorrespondenceSet&) const = default;
};

inline std::size_t card(const CorrespondenceSet& cs) {
  return cs.members.size();
}

struct CorrespondenceOptions {
  // Pairs below this confidence are ignored.
  double min_confidence = 0.0;
  // Ignore pairs whose ends come from the same source ontology.
  bool drop_self_mappings = false;
};

// The equivalence closure of pairwise correspondences over n ontologies.
// Sets are pairwise disjoint and ordered by their smallest member IRI, which
// makes the order independent of both pair order and ontology order.
class CorrespondenceModel {
 public:
  CorrespondenceModel() = default;

  // Throws kInvalidArgument when sets overlap, are too small, or are not
  // sorted by their smallest member.
  static CorrespondenceModel from_sets(std::vector<CorrespondenceSet> sets);

  const std::vector<CorrespondenceSet>& sets() const { return sets_; }
  bool empty() const { return sets_.empty(); }
  std::size_t size() const { return sets_.size(); }

  // Position of the set containing `id`, if any.
  std::optional<std::size_t> set_of(const EntityId& id) const;

 private:
  std::vector<CorrespondenceSet> sets_;
  std::unordered_map<EntityId, std::size_t> index_;
};

// Union-find closure of all mapping pairs. Singleton groups never appear.
// Throws kUnknownEntity for IRIs absent from every ontology and
// kKindMismatch for pairs joining entities of different kinds.
CorrespondenceModel build_model(std::span<const Ontology> ontologies,
                                std::span<const MappingFile> mappings,
                                const CorrespondenceOptions& options = {});

// |Cor|: the number of entities taking part in some correspondence set.
std::size_t total_correspondences(const CorrespondenceModel& model);

// A star-shaped pair list whose closure reproduces `model`.
MappingFile to_mapping(const CorrespondenceModel& model);

}  // namespace ontomerge

#endif  // ONTOMERGE_CORRESPONDENCE_H_
