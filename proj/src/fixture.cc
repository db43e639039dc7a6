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

#include "ontomerge/fixture.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <random>
#include <utility>

#include "ontomerge/error.h"

namespace ontomerge {

namespace {

// Thin wrapper over mt19937_64 whose derived draws are defined here rather
// than by the standard library distributions, so fixtures are identical on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(engine_() % n);
  }
  double unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  bool chance(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

Entity make_entity(std::string iri, EntityKind kind, std::string origin,
                   std::string label) {
  Entity e;
  e.id = EntityId{std::move(iri)};
  e.kind = kind;
  e.origin = std::move(origin);
  e.labels.insert(std::move(label));
  return e;
}

// Members of one shared concept, in ontology order.
using ConceptMembers = std::map<std::size_t, std::vector<std::string>>;

// Links the members of every concept into a random spanning tree of pairs.
void add_concept_pairs(const ConceptMembers& concepts, Rng& rng,
                       MappingFile& mapping) {
  for (const auto& [concept_id, members] : concepts) {
    std::vector<std::string> order = members;
    rng.shuffle(order);
    for (std::size_t i = 1; i < order.size(); ++i) {
      mapping.pairs.push_back(
          {EntityId{order[rng.below(i)]}, EntityId{order[i]}, 1.0});
    }
  }
}

std::vector<std::size_t> sample(std::size_t pool, std::size_t count, Rng& rng) {
  std::vector<std::size_t> all(pool);
  for (std::size_t i = 0; i < pool; ++i) all[i] = i;
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(all[i], all[i + rng.below(pool - i)]);
  }
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

Fixture generate_fixture(const FixtureParams& params) {
  if (params.n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "fixture needs n >= 2");
  }
  if (params.size < 1) {
    throw Error(ErrorCode::kInvalidArgument, "fixture needs size >= 1");
  }
  if (!(params.overlap >= 0.0 && params.overlap <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "overlap must lie in [0, 1]");
  }

  Rng rng(params.seed);
  Fixture fx;
  ConceptMembers class_concepts;
  ConceptMembers property_concepts;
  const std::size_t size = params.size;
  const auto shared_classes = static_cast<std::size_t>(
      std::llround(params.overlap * static_cast<double>(size)));
  const std::size_t property_count = std::max<std::size_t>(1, size / 5);
  const auto shared_properties = static_cast<std::size_t>(
      std::llround(params.overlap * static_cast<double>(property_count)));

  for (std::size_t i = 1; i <= params.n; ++i) {
    const std::string name = "o" + std::to_string(i);
    const std::string prefix = name + ":";
    Ontology o(name);

    // Classes: (iri, shared concept or -1).
    std::vector<std::pair<std::string, long>> classes;
    for (std::size_t c : sample(size, shared_classes, rng)) {
      std::string iri = prefix + "C" + std::to_string(c);
      o.add_entity(make_entity(iri, EntityKind::kClass, name,
                               "concept " + std::to_string(c)));
      class_concepts[c].push_back(iri);
      classes.emplace_back(iri, static_cast<long>(c));
    }
    for (std::size_t j = 0; classes.size() < size; ++j) {
      std::string iri = prefix + "L" + std::to_string(j);
      o.add_entity(make_entity(iri, EntityKind::kClass, name,
                               name + " local " + std::to_string(j)));
      classes.emplace_back(iri, -1);
    }
    rng.shuffle(classes);

    // Tree taxonomy. Shared concepts mostly hang below a shared concept
    // with a smaller number, which keeps the merged taxonomy nearly
    // acyclic; the remaining edges are random and may close cycles.
    std::vector<std::size_t> linked;  // positions usable as parents
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (j > 0 && rng.chance(0.04)) continue;  // stays isolated
      if (!linked.empty() && !rng.chance(0.03)) {
        std::size_t parent = linked[rng.below(linked.size())];
        if (classes[j].second >= 0 && rng.chance(0.85)) {
          std::vector<std::size_t> lower;
          for (std::size_t p : linked) {
            if (classes[p].second >= 0 && classes[p].second < classes[j].second) {
              lower.push_back(p);
            }
          }
          if (!lower.empty()) parent = lower[rng.below(lower.size())];
        }
        o.add_axiom(Axiom::sub_class_of(classes[j].first, classes[parent].first));
      }
      linked.push_back(j);
    }
    auto any_class = [&]() -> const std::string& {
      return classes[linked[rng.below(linked.size())]].first;
    };

    // Properties: shared ones are object properties; a quarter of the
    // local ones are data properties.
    std::vector<std::pair<std::string, EntityKind>> properties;
    for (std::size_t c : sample(property_count, shared_properties, rng)) {
      std::string iri = prefix + "p" + std::to_string(c);
      o.add_entity(make_entity(iri, EntityKind::kObjectProperty, name,
                               "relation " + std::to_string(c)));
      property_concepts[c].push_back(iri);
      properties.emplace_back(iri, EntityKind::kObjectProperty);
    }
    for (std::size_t j = 0; properties.size() < property_count; ++j) {
      EntityKind kind = j % 4 == 3 ? EntityKind::kDataProperty
                                   : EntityKind::kObjectProperty;
      std::string iri = prefix + "q" + std::to_string(j);
      o.add_entity(make_entity(iri, kind, name,
                               name + " relation " + std::to_string(j)));
      properties.emplace_back(iri, kind);
    }
    for (std::size_t j = 0; j < properties.size(); ++j) {
      const auto& [iri, kind] = properties[j];
      o.add_axiom(Axiom::domain(iri, any_class()));
      if (kind == EntityKind::kObjectProperty) {
        o.add_axiom(Axiom::range(iri, any_class()));
      }
      if (j > 0 && rng.chance(0.2)) {
        const auto& super = properties[rng.below(j)];
        if (super.second == kind) o.add_axiom(Axiom::sub_property_of(iri, super.first));
      }
    }

    // Union classes over two or three other classes.
    for (std::size_t u = 0; u < size / 15 && classes.size() >= 3; ++u) {
      const std::string& subject = any_class();
      std::vector<std::string> members;
      std::size_t want = 2 + rng.below(2);
      for (std::size_t tries = 0; members.size() < want && tries < 20; ++tries) {
        const std::string& m = classes[rng.below(classes.size())].first;
        if (m != subject &&
            std::find(members.begin(), members.end(), m) == members.end()) {
          members.push_back(m);
        }
      }
      if (members.size() >= 2) o.add_axiom(Axiom::union_of(subject, members));
    }

    for (std::size_t j = 0; j < size / 10; ++j) {
      std::string iri = prefix + "i" + std::to_string(j);
      o.add_entity(make_entity(iri, EntityKind::kInstance, name,
                               name + " item " + std::to_string(j)));
      o.add_axiom(Axiom::instance_of(iri, any_class()));
    }
    fx.ontologies.push_back(std::move(o));
  }

  add_concept_pairs(class_concepts, rng, fx.perfect);
  add_concept_pairs(property_concepts, rng, fx.perfect);

  for (const MappingPair& p : fx.perfect.pairs) {
    if (!rng.chance(0.1)) fx.imperfect.pairs.push_back(p);
  }
  const auto wrong = static_cast<std::size_t>(
      std::llround(0.05 * static_cast<double>(fx.perfect.pairs.size())));
  for (std::size_t w = 0; w < wrong; ++w) {
    std::size_t a = rng.below(params.n);
    std::size_t b = (a + 1 + rng.below(params.n - 1)) % params.n;
    auto pick = [&](std::size_t k) {
      const auto& entities = fx.ontologies[k].entities();
      std::vector<EntityId> cls;
      for (const auto& [id, e] : entities) {
        if (e.kind == EntityKind::kClass) cls.push_back(id);
      }
      return cls[rng.below(cls.size())];
    };
    fx.imperfect.pairs.push_back({pick(a), pick(b), 1.0});
  }
  return fx;
}

namespace {

struct Fig1Builder {
  Ontology onto;

  explicit Fig1Builder(std::string name) : onto(std::move(name)) {}

  Fig1Builder& cls(std::initializer_list<const char*> names) {
    for (const char* n : names) declare(n, EntityKind::kClass);
    return *this;
  }
  Fig1Builder& obj(const char* n) {
    declare(n, EntityKind::kObjectProperty);
    return *this;
  }
  Fig1Builder& ind(const char* n) {
    declare(n, EntityKind::kInstance);
    return *this;
  }
  Fig1Builder& sub(const char* a, const char* b) {
    onto.add_axiom(Axiom::sub_class_of(iri(a), iri(b)));
    return *this;
  }
  Fig1Builder& dom(const char* p, const char* c) {
    onto.add_axiom(Axiom::domain(iri(p), iri(c)));
    return *this;
  }
  Fig1Builder& rng(const char* p, const char* c) {
    onto.add_axiom(Axiom::range(iri(p), iri(c)));
    return *this;
  }
  Fig1Builder& inst(const char* i, const char* c) {
    onto.add_axiom(Axiom::instance_of(iri(i), iri(c)));
    return *this;
  }

  std::string iri(const char* n) const { return onto.name() + ":" + n; }
  void declare(const char* n, EntityKind kind) {
    onto.add_entity(make_entity(iri(n), kind, onto.name(), n));
  }
};

}  // namespace

Fixture fig1_fixture() {
  Fixture fx;
  Fig1Builder o1("o1");
  o1.cls({"Paper", "Review", "Assessment", "Document"})
      .sub("Review", "Paper")
      .sub("Review", "Assessment")
      .sub("Assessment", "Document");
  Fig1Builder o2("o2");
  o2.cls({"Article", "Author", "Agent", "Topic", "Keyword", "Concept"})
      .sub("Author", "Agent")
      .sub("Keyword", "Topic")
      .sub("Topic", "Concept");
  Fig1Builder o3("o3");
  o3.cls({"Contribution", "Writer", "Conference", "Event", "Workshop",
          "Committee"})
      .obj("heldBy")
      .sub("Conference", "Event")
      .sub("Workshop", "Conference")
      .dom("heldBy", "Conference")
      .rng("heldBy", "Committee");
  Fig1Builder o4("o4");
  o4.cls({"Paper", "Author", "Review", "Meeting", "Person", "Gathering",
          "Feedback", "Role", "Submission", "Keynote"})
      .obj("reviews")
      .ind("alice")
      .sub("Meeting", "Gathering")
      .sub("Keynote", "Meeting")
      .sub("Review", "Feedback")
      .sub("Author", "Role")
      .sub("Submission", "Feedback")
      .dom("reviews", "Review")
      .rng("reviews", "Submission")
      .inst("alice", "Person");
  Fig1Builder o5("o5");
  o5.cls({"Article", "Person", "Subject", "Item", "Human", "Category",
          "Letter", "Survey", "Expert", "Tutorial", "Student",
          "Field"})
      .obj("about")
      .obj("writes")
      .ind("bob")
      .sub("Article", "Item")
      .sub("Letter", "Article")
      .sub("Survey", "Article")
      .sub("Tutorial", "Article")
      .sub("Student", "Person")
      .sub("Field", "Subject")
      .sub("Person", "Human")
      .sub("Expert", "Person")
      .sub("Subject", "Category")
      .dom("about", "Article")
      .rng("about", "Subject")
      .dom("writes", "Person")
      .rng("writes", "Article")
      .inst("bob", "Person");
  for (Fig1Builder* b : {&o1, &o2, &o3, &o4, &o5}) {
    fx.ontologies.push_back(std::move(b->onto));
  }

  auto pair = [&](const char* a, const char* b) {
    fx.perfect.pairs.push_back({EntityId{a}, EntityId{b}, 1.0});
  };
  pair("o1:Paper", "o2:Article");
  pair("o2:Article", "o3:Contribution");
  pair("o3:Contribution", "o4:Paper");
  pair("o4:Paper", "o5:Article");
  pair("o2:Author", "o3:Writer");
  pair("o3:Writer", "o4:Author");
  pair("o1:Review", "o4:Review");
  pair("o3:Conference", "o4:Meeting");
  pair("o4:Person", "o5:Person");
  pair("o2:Topic", "o5:Subject");
  // The imperfect variant misses Review and wrongly matches a keyword with
  // a committee.
  for (const MappingPair& p : fx.perfect.pairs) {
    if (p.left.iri != "o1:Review") fx.imperfect.pairs.push_back(p);
  }
  fx.imperfect.pairs.push_back(
      {EntityId{"o2:Keyword"}, EntityId{"o3:Committee"}, 1.0});
  return fx;
}

std::vector<std::string> write_fixture(const Fixture& fixture,
                                       const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  std::string manifest;
  for (const Ontology& o : fixture.ontologies) {
    std::string path = (std::filesystem::path(dir) / (o.name() + ".onto")).string();
    write_text_file(path, serialize_ontology(o));
    paths.push_back(path);
    manifest += "ontology " + o.name() + ".onto\n";
  }
  write_text_file(std::filesystem::path(dir) / "perfect.map",
                  serialize_mapping(fixture.perfect));
  write_text_file(std::filesystem::path(dir) / "imperfect.map",
                  serialize_mapping(fixture.imperfect));
  manifest += "mapping perfect.map\nmapping-imperfect imperfect.map\n";
  write_text_file(std::filesystem::path(dir) / "manifest.txt", manifest);
  return paths;
}

}  // namespace ontomerge
