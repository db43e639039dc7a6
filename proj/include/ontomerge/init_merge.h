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

#ifndef ONTOMERGE_INIT_MERGE_H_
#define ONTOMERGE_INIT_MERGE_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ontomerge/correspondence.h"
#include "ontomerge/ontology.h"

namespace ontomerge {

// Hands out fresh `merged:<k>` IRIs, k = 1, 2, ... in request order. One
// allocator is shared by every step of a strategy run.
class IdAllocator {
 public:
  // Skips numbers whose IRI is already declared in `avoid`.
  EntityId next(const Ontology& avoid);
  std::size_t issued() const { return next_ - 1; }

 private:
  std::size_t next_ = 1;
};

// The initial merge model: the working entity and axiom store that the
// partitioner and the combiner read from.
struct MergeModel {
  Ontology ontology{"merged"};
  // Input entity -> the integrated entity that replaced it.
  std::map<EntityId, EntityId> integrated_of;
  std::vector<std::string> sources;
  // Replaced entities still awaiting translate_axioms.
  std::map<EntityId, EntityId> pending;
};

struct InitStats {
  std::size_t combine = 0;        // integrated entities created
  std::size_t translated = 0;     // axiom rewrite events (|tr|)
  std::size_t discarded = 0;      // axioms made vacuous by translation
  std::size_t input_axioms = 0;   // axioms seen by the translator
};

// Disjoint union of the sources. Identical IRIs in two sources denote the
// same entity. Throws kDuplicateOntology on repeated names.
MergeModel build_initial_model(std::span<const Ontology> ontologies);

// Creates one integrated entity per correspondence set, carrying the union
// of the member labels. Members stay declared until translate_axioms retires
// them.
MergeModel integrate_entities(MergeModel model,
                              const CorrespondenceModel& corr,
                              IdAllocator& ids, InitStats* stats = nullptr);

// Rewrites every axiom that mentions a replaced entity onto its integrated
// entity and retires the replaced entities. Rewritten SubClassOf/SubPropertyOf
// self-loops and unions left with fewer than two distinct members are
// dropped and counted as discarded.
MergeModel translate_axioms(MergeModel model, InitStats* stats = nullptr);

// Initialization end to end; the result is the naive direct merge.
MergeModel naive_merge(std::span<const Ontology> ontologies,
                       const CorrespondenceModel& corr, IdAllocator& ids,
                       InitStats* stats = nullptr);

}  // namespace ontomerge

#endif  // ONTOMERGE_INIT_MERGE_H_
