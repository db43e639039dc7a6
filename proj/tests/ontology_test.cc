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

#include "ontomerge/ontology.h"

#include <set>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ontomerge/error.h"
#include "ontomerge/io.h"
#include "ontomerge/taxonomy.h"
#include "oracles.h"
#include "test_util.h"

namespace ontomerge {
namespace {

using ::ontomerge::testing::fixture_path;
using ::ontomerge::testing::id;
using ::ontomerge::testing::onto;
using ::testing::ElementsAre;
using ::testing::UnorderedElementsAre;

constexpr char kChain[] = R"(ONTOLOGY t
CLASS t:A
CLASS t:B
CLASS t:C
CLASS t:X
SUBCLASS t:A t:B
SUBCLASS t:B t:C
)";

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

TEST(SignatureTest, EmptyOntology) {
  EXPECT_TRUE(signature(Ontology("e")).empty());
}

TEST(SignatureTest, ClassesAndProperty) {
  Ontology o = onto("ONTOLOGY t\nCLASS t:A\nCLASS t:B\nOBJPROP t:p\n");
  EXPECT_THAT(signature(o), ElementsAre(id("t:A"), id("t:B"), id("t:p")));
}

TEST(SignatureTest, ConfAFixtureDeclaresTwelveEntities) {
  Ontology o = read_ontology_file(fixture_path("conf_a.onto"));
  std::set<EntityId> expected;
  for (const char* iri :
       {"conf_a:Document", "conf_a:Paper", "conf_a:Review", "conf_a:Person",
        "conf_a:Author", "conf_a:Reviewer", "conf_a:Conference",
        "conf_a:Topic", "conf_a:writes", "conf_a:reviews", "conf_a:title",
        "conf_a:iswc"}) {
    expected.insert(id(iri));
  }
  EXPECT_EQ(signature(o), expected);
}

TEST(TaxonomicNeighborsTest, ChainMiddle) {
  EXPECT_THAT(taxonomic_neighbors(onto(kChain), id("t:B")),
              ElementsAre(id("t:A"), id("t:C")));
}

TEST(TaxonomicNeighborsTest, IsolatedClass) {
  EXPECT_TRUE(taxonomic_neighbors(onto(kChain), id("t:X")).empty());
}

TEST(TaxonomicNeighborsTest, UnknownClassThrows) {
  EXPECT_EQ(code_of([] { taxonomic_neighbors(onto(kChain), id("t:Q")); }),
            ErrorCode::kUnknownEntity);
}

TEST(TaxonomicNeighborsTest, ConfAPaperMatchesAxiomScan) {
  Ontology o = read_ontology_file(fixture_path("conf_a.onto"));
  std::set<EntityId> scanned;
  for (const auto& [sub, super] : oracle::taxonomy_edges(o)) {
    if (sub == "conf_a:Paper") scanned.insert(id(super));
    if (super == "conf_a:Paper") scanned.insert(id(sub));
  }
  EXPECT_EQ(taxonomic_neighbors(o, id("conf_a:Paper")), scanned);
  EXPECT_FALSE(scanned.empty());
}

TEST(ConnectivityCountsTest, HandBuiltToy) {
  Ontology o = onto(R"(ONTOLOGY t
CLASS t:C
CLASS t:S1
CLASS t:S2
CLASS t:Top
OBJPROP t:p
OBJPROP t:q
SUBCLASS t:S1 t:C
SUBCLASS t:S2 t:C
SUBCLASS t:C t:Top
DOMAIN t:p t:C
RANGE t:q t:C
DOMAIN t:q t:Top
)");
  EXPECT_EQ(connectivity_counts(o, id("t:C")), (ConnectivityCounts{3, 2}));
}

TEST(ConnectivityCountsTest, IsolatedClass) {
  EXPECT_EQ(connectivity_counts(onto(kChain), id("t:X")),
            (ConnectivityCounts{0, 0}));
}

TEST(ConnectivityCountsTest, UnionMemberOnly) {
  Ontology o = onto(R"(ONTOLOGY t
CLASS t:U
CLASS t:M
CLASS t:N
UNION t:U t:M t:N
)");
  EXPECT_EQ(connectivity_counts(o, id("t:M")), (ConnectivityCounts{0, 1}));
}

TEST(ConnectivityCountsTest, UnknownClassThrows) {
  EXPECT_EQ(code_of([] { connectivity_counts(onto(kChain), id("t:Q")); }),
            ErrorCode::kUnknownEntity);
}

TEST(AxiomIndexTest, AgreesWithScansOnFixtures) {
  for (const char* file : {"conf_a.onto", "conf_b.onto", "bio/anat.onto",
                           "bio/path.onto", "bio/phys.onto"}) {
    Ontology o = read_ontology_file(fixture_path(file));
    AxiomIndex index(o);
    for (const auto& [cls, e] : o.entities()) {
      if (e.kind != EntityKind::kClass) continue;
      std::set<EntityId> indexed(index.taxonomic_neighbors(cls).begin(),
                                 index.taxonomic_neighbors(cls).end());
      EXPECT_EQ(indexed, taxonomic_neighbors(o, cls)) << file << " " << cls.iri;
      EXPECT_EQ(index.counts(cls), connectivity_counts(o, cls));
    }
  }
}

TEST(OntologyTest, DuplicateDeclarationRejected) {
  Ontology o("t");
  o.add_entity(Entity{id("t:A"), EntityKind::kClass, "t", {}});
  EXPECT_EQ(code_of([&] {
              o.add_entity(Entity{id("t:A"), EntityKind::kClass, "t", {}});
            }),
            ErrorCode::kDuplicateDeclaration);
}

TEST(OntologyTest, DefaultLabelIsLocalName) {
  Ontology o("t");
  o.add_entity(Entity{id("t:Paper"), EntityKind::kClass, "t", {}});
  EXPECT_THAT(o.entity(id("t:Paper")).labels, ElementsAre("Paper"));
}

TEST(OntologyTest, UpsertUnionsLabelsAndRejectsKindClash) {
  Ontology o("t");
  o.upsert_entity(Entity{id("x:A"), EntityKind::kClass, "a", {"One"}});
  o.upsert_entity(Entity{id("x:A"), EntityKind::kClass, "b", {"Two"}});
  EXPECT_THAT(o.entity(id("x:A")).labels, UnorderedElementsAre("One", "Two"));
  EXPECT_EQ(code_of([&] {
              o.upsert_entity(
                  Entity{id("x:A"), EntityKind::kInstance, "c", {}});
            }),
            ErrorCode::kKindMismatch);
}

TEST(OntologyTest, AxiomValidation) {
  Ontology o = onto(kChain);
  EXPECT_EQ(code_of([&] { o.add_axiom(Axiom::sub_class_of("t:A", "t:Q")); }),
            ErrorCode::kUnknownEntity);
  EXPECT_EQ(code_of([&] { o.add_axiom(Axiom::sub_class_of("t:A", "t:A")); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { o.add_axiom(Axiom::union_of("t:A", {"t:B", "t:B"})); }),
            ErrorCode::kInvalidArgument);
  EXPECT_FALSE(o.add_axiom(Axiom::sub_class_of("t:A", "t:B")));
  EXPECT_TRUE(o.add_axiom(Axiom::sub_class_of("t:A", "t:C")));
}

TEST(OntologyTest, RemoveEntityCascades) {
  Ontology o = onto(kChain);
  EXPECT_EQ(o.remove_entity(id("t:B")), 2u);
  EXPECT_TRUE(o.axioms().empty());
  EXPECT_FALSE(o.contains(id("t:B")));
}

TEST(LocalNameTest, SplitsOnLastSeparator) {
  EXPECT_EQ(local_name("a:Paper"), "Paper");
  EXPECT_EQ(local_name("http://x.org/onto#Thing"), "Thing");
  EXPECT_EQ(local_name("plain"), "plain");
}

// ClassGraph ------------------------------------------------------------

TEST(ClassGraphTest, ReachabilityMatchesClosure) {
  Ontology o = read_ontology_file(fixture_path("bio/phys.onto"));
  ClassGraph g(o);
  oracle::Closure closure(o);
  for (ClassGraph::Vertex a = 0; a < g.size(); ++a) {
    for (ClassGraph::Vertex b = 0; b < g.size(); ++b) {
      EXPECT_EQ(g.reachable(a, b), closure.reaches(g.id(a).iri, g.id(b).iri))
          << g.id(a).iri << " -> " << g.id(b).iri;
    }
  }
}

TEST(ClassGraphTest, FindCycleReturnsARealCycle) {
  Ontology o = read_ontology_file(fixture_path("bio/phys.onto"));
  ClassGraph g(o);
  auto cycle = g.find_cycle();
  ASSERT_EQ(cycle.size(), 2u);
  EXPECT_TRUE(g.has_edge(cycle[0], cycle[1]));
  EXPECT_TRUE(g.has_edge(cycle[1], cycle[0]));
  EXPECT_TRUE(ClassGraph(onto(kChain)).find_cycle().empty());
}

TEST(ClassGraphTest, CycleCountMatchesEnumeration) {
  Ontology o = onto(R"(ONTOLOGY t
CLASS t:A
CLASS t:B
CLASS t:C
CLASS t:D
SUBCLASS t:A t:B
SUBCLASS t:B t:C
SUBCLASS t:C t:A
SUBCLASS t:B t:A
SUBCLASS t:C t:D
SUBCLASS t:D t:B
)");
  bool capped = true;
  std::size_t count = ClassGraph(o).count_elementary_cycles(1000, &capped);
  EXPECT_EQ(count, oracle::count_simple_cycles(o));
  EXPECT_EQ(count, 3u);
  EXPECT_FALSE(capped);
  EXPECT_EQ(ClassGraph(o).count_elementary_cycles(2, &capped), 2u);
  EXPECT_TRUE(capped);
}

}  // namespace
}  // namespace ontomerge
