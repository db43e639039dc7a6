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

#ifndef ONTOMERGE_IO_H_
#define ONTOMERGE_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ontomerge/ontology.h"

namespace ontomerge {

struct MappingPair {
  EntityId left;
  EntityId right;
  double confidence = 1.0;

  bool operator==(const MappingPair&) const = default;
};

struct MappingFile {
  // From the optional `MAPPING <left> <right>` header; empty otherwise.
  std::string left_name;
  std::string right_name;
  std::vector<MappingPair> pairs;

  bool operator==(const MappingFile&) const = default;
};

// Line-oriented ONTO format:
//
//   ONTOLOGY <name>
//   CLASS <iri> | OBJPROP <iri> | DATAPROP <iri> | INSTANCE <iri>
//   LABEL <iri> "<text>"
//   SUBCLASS <sub> <super>      SUBPROP <sub> <super>
//   DOMAIN <prop> <class>       RANGE <prop> <class>
//   UNION <class> <m1> <m2> [...]
//   TYPE <instance> <class>
//
// `#` starts a comment. Declarations may follow their first use. An entity
// without LABEL lines is labelled with the local name of its IRI.
Ontology parse_ontology(std::istream& in);
Ontology parse_ontology(std::string_view text);

// Tab-separated `left<TAB>right[<TAB>confidence]` lines with an optional
// `MAPPING <nameA> <nameB>` header.
MappingFile parse_mapping(std::istream& in);
MappingFile parse_mapping(std::string_view text);

// Byte-deterministic: declarations and labels in IRI order, then axiom lines
// in lexicographic order.
std::string serialize_ontology(const Ontology& ontology);
std::string serialize_mapping(const MappingFile& mapping);

Ontology read_ontology_file(const std::filesystem::path& path);
MappingFile read_mapping_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     std::string_view contents);

}  // namespace ontomerge

#endif  // ONTOMERGE_IO_H_
