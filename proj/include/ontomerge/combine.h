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

// Combining phase: axioms are assigned to the partition blocks to form
// local sub-ontologies, which are refined independently and then merged
// back together, most related blocks first.

#ifndef ONTOMERGE_COMBINE_H_
#define ONTOMERGE_COMBINE_H_

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "ontomerge/init_merge.h"
#include "ontomerge/ontology.h"
#include "ontomerge/partition.h"
#include "ontomerge/refine.h"

namespace ontomerge {

// Pseudo block id standing for the unassigned classes.
inline constexpr std::size_t kUnassignedSpace = 0;

struct SubOntology {
  std::size_t block_id = 0;
  Ontology ontology;
};

struct DistributedAxiomSet {
  std::set<Axiom> axioms;
  // Blocks touched by each axiom; kUnassignedSpace marks a participant
  // among the unassigned classes.
  std::map<Axiom, std::set<std::size_t>> touches;
  // Non-class participants of the axioms, so they can be declared when the
  // axiom is re-attached.
  std::map<EntityId, Entity> entities;

  // Distributed SubClassOf axioms.
  std::size_t taxonomic() const;
};

struct AxiomAssignment {
  std::vector<SubOntology> subs;  // in block order
  DistributedAxiomSet distributed;
  // Unassigned classes, entities attached to no block, and axioms with no
  // block participant.
  Ontology residual;
};

AxiomAssignment assign_axioms(const MergeModel& model,
                              const PartitionResult& part);

std::size_t inter_relatedness(const DistributedAxiomSet& d, std::size_t i,
                              std::size_t j);

// Runs local refinement on every sub-ontology, serially when `jobs` <= 1
// and on up to `jobs` worker threads otherwise. Results are indexed like
// `subs` and do not depend on `jobs`.
std::vector<RefinementOutcome> intra_combine(
    std::vector<SubOntology>& subs, const RefinementConfig& config,
    const PreservationContext& context, int jobs);

struct InterCombineStats {
  std::size_t steps = 0;             // block joins into a growing group
  std::size_t reattached = 0;        // distributed axioms added back
  std::vector<std::size_t> order;    // block ids in the order they joined
};

using GlobalHook = std::function<void(Ontology&)>;

Ontology inter_combine(const std::vector<SubOntology>& subs,
                       const DistributedAxiomSet& d,
                       const PartitionResult& part, const Ontology& residual,
                       const GlobalHook& refiner,
                       InterCombineStats* stats = nullptr);

}  // namespace ontomerge

#endif  // ONTOMERGE_COMBINE_H_
