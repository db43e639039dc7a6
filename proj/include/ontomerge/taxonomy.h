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

#ifndef ONTOMERGE_TAXONOMY_H_
#define ONTOMERGE_TAXONOMY_H_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ontomerge/ontology.h"

namespace ontomerge {

// The SubClassOf digraph of an ontology (edge sub -> super). Vertices are
// the classes in IRI order, so every traversal below is deterministic.
class ClassGraph {
 public:
  using Vertex = std::size_t;

  explicit ClassGraph(const Ontology& ontology);

  std::size_t size() const { return ids_.size(); }
  std::optional<Vertex> vertex(const EntityId& cls) const;
  const EntityId& id(Vertex v) const { return ids_[v]; }

  const std::vector<Vertex>& supers(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& subs(Vertex v) const { return in_[v]; }
  std::size_t degree(Vertex v) const { return out_[v].size() + in_[v].size(); }

  bool has_edge(Vertex sub, Vertex super) const;
  void add_edge(Vertex sub, Vertex super);
  void remove_edge(Vertex sub, Vertex super);

  // True when a directed path from -> ... -> to exists (trivially for
  // from == to).
  bool reachable(Vertex from, Vertex to) const;

  // Tarjan's algorithm; components come out in reverse topological order,
  // each sorted ascending.
  std::vector<std::vector<Vertex>> strongly_connected_components() const;

  // A shortest cycle through the smallest vertex of the first non-trivial
  // component, as the vertex sequence v0 -> v1 -> ... -> v0 (v0 not
  // repeated). Empty when the graph is acyclic.
  std::vector<Vertex> find_cycle() const;

  // Elementary cycles (Johnson), stopping once `cap` have been found.
  std::size_t count_elementary_cycles(std::size_t cap,
                                      bool* capped = nullptr) const;

 private:
  std::vector<EntityId> ids_;
  std::unordered_map<EntityId, Vertex> index_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

}  // namespace ontomerge

#endif  // ONTOMERGE_TAXONOMY_H_
