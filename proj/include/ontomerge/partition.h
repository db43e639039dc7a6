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

#ifndef ONTOMERGE_PARTITION_H_
#define ONTOMERGE_PARTITION_H_

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "ontomerge/correspondence.h"
#include "ontomerge/init_merge.h"

namespace ontomerge {

// Relative weight of taxonomic and non-taxonomic relations in a class's
// connectivity degree.
struct Weights {
  double taxonomic = 0.75;
  double non_taxonomic = 0.5;
};

struct Pivot {
  CorrespondenceSet set;
  EntityId integrated;
  double reputation = 0.0;
};

// Class correspondence sets by descending reputation; ties go to the set
// with the smaller first member IRI.
using PivotList = std::vector<Pivot>;

struct Block {
  std::size_t id = 0;  // 1-based, in creation order
  std::set<EntityId> classes;
};

struct PartitionResult {
  std::vector<Block> blocks;
  // Classes without any taxonomic edge; they bypass the blocks.
  std::set<EntityId> unassigned_classes;
  // Blocks seeded by a pivot; the rest were swept from pivot-free
  // taxonomy components.
  std::size_t pivot_blocks = 0;

  std::size_t k() const { return blocks.size(); }
};

// w_t * |taxonomic relations| + w_nt * |non-taxonomic relations| of `cls`.
double connectivity(const MergeModel& model, const EntityId& cls,
                    const Weights& weights);

// Connectivity of the set's integrated class times the set's cardinality.
// Throws kNotIntegrated if the members were not fused into one entity.
double reputation(const MergeModel& model, const CorrespondenceSet& cs,
                  const Weights& weights);

PivotList find_pivots(const MergeModel& model, const CorrespondenceModel& corr,
                      const Weights& weights);

// Grows one block per usable pivot by closing over taxonomic neighbours,
// never claiming a class twice. Pivots that are already covered or that
// have no taxonomic edge are skipped. Remaining connected classes are swept
// into blocks, one per leftover taxonomy component.
PartitionResult partition(const MergeModel& model, const PivotList& pivots);

// Corresponding source classes over all source classes, in [0, 1].
double overlap_ratio(const CorrespondenceModel& corr,
                     std::span<const Ontology> sources);

}  // namespace ontomerge

#endif  // ONTOMERGE_PARTITION_H_
