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

#include "ontomerge/init_merge.h"

#include <algorithm>
#include <set>
#include <utility>

#include "ontomerge/error.h"

namespace ontomerge {

EntityId IdAllocator::next(const Ontology& avoid) {
  while (true) {
    EntityId id{"merged:" + std::to_string(next_++)};
    if (!avoid.contains(id)) return id;
  }
}

MergeModel build_initial_model(std::span<const Ontology> ontologies) {
  MergeModel model;
  std::set<std::string> names;
  for (const Ontology& o : ontologies) {
    if (!names.insert(o.name()).second) {
      throw Error(ErrorCode::kDuplicateOntology,
                  "ontology name '" + o.name() + "' used twice");
    }
    model.sources.push_back(o.name());
    for (const auto& [id, entity] : o.entities()) {
      model.ontology.upsert_entity(entity);
    }
  }
  for (const Ontology& o : ontologies) {
    for (const Axiom& a : o.axioms()) {
      Axiom copy = a;
      if (copy.provenance.empty()) copy.provenance = o.name();
      model.ontology.add_axiom(std::move(copy));
    }
  }
  return model;
}

MergeModel integrate_entities(MergeModel model,
                              const CorrespondenceModel& corr,
                              IdAllocator& ids, InitStats* stats) {
  for (const CorrespondenceSet& cs : corr.sets()) {
    Entity merged;
    merged.kind = cs.kind;
    merged.origin = std::string(kMergedOrigin);
    for (const EntityId& member : cs.members) {
      const Entity* e = model.ontology.find(member);
      if (e == nullptr || model.pending.count(member) > 0) {
        throw Error(ErrorCode::kUnknownEntity,
                    "correspondence member '" + member.iri +
                        "' is not in the merge model");
      }
      if (e->kind != cs.kind) {
        throw Error(ErrorCode::kKindMismatch,
                    "correspondence member '" + member.iri + "' is a " +
                        std::string(entity_kind_name(e->kind)));
      }
      merged.labels.insert(e->labels.begin(), e->labels.end());
    }
    merged.id = ids.next(model.ontology);
    for (const EntityId& member : cs.members) {
      model.pending[member] = merged.id;
      model.integrated_of[member] = merged.id;
    }
    model.ontology.add_entity(std::move(merged));
    if (stats != nullptr) ++stats->combine;
  }
  return model;
}

MergeModel translate_axioms(MergeModel model, InitStats* stats) {
  const auto& pending = model.pending;
  auto image = [&](const EntityId& id) -> const EntityId& {
    auto it = pending.find(id);
    return it == pending.end() ? id : it->second;
  };

  Ontology out(model.ontology.name());
  for (const auto& [id, entity] : model.ontology.entities()) {
    if (pending.count(id) == 0) out.add_entity(entity);
  }
  for (const Axiom& a : model.ontology.axioms()) {
    if (stats != nullptr) ++stats->input_axioms;
    Axiom t = a;
    bool rewritten = false;
    auto rewrite = [&](EntityId& id) {
      const EntityId& to = image(id);
      if (to != id) {
        id = to;
        rewritten = true;
      }
    };
    rewrite(t.subject);
    for (EntityId& o : t.objects) rewrite(o);
    if (!rewritten) {
      out.add_axiom(std::move(t));
      continue;
    }
    t.translated = true;
    if (stats != nullptr) ++stats->translated;

    bool vacuous = false;
    if (t.kind == AxiomKind::kUnionOf) {
      std::vector<EntityId> members;
      for (EntityId& m : t.objects) {
        if (std::find(members.begin(), members.end(), m) == members.end()) {
          members.push_back(std::move(m));
        }
      }
      t.objects = std::move(members);
      vacuous = t.objects.size() < 2;
    } else if (t.kind == AxiomKind::kSubClassOf ||
               t.kind == AxiomKind::kSubPropertyOf) {
      vacuous = t.subject == t.objects[0];
    }
    if (vacuous) {
      if (stats != nullptr) ++stats->discarded;
      continue;
    }
    out.add_axiom(std::move(t));
  }
  model.ontology = std::move(out);
  model.pending.clear();
  return model;
}

MergeModel naive_merge(std::span<const Ontology> ontologies,
                       const CorrespondenceModel& corr, IdAllocator& ids,
                       InitStats* stats) {
  MergeModel model = build_initial_model(ontologies);
  model = integrate_entities(std::move(model), corr, ids, stats);
  return translate_axioms(std::move(model), stats);
}

}  // namespace ontomerge
