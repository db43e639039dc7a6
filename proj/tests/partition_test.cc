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

#include "ontomerge/partition.h"

#include <algorithm>
#include <set>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ontomerge/error.h"
#include "ontomerge/fixture.h"
#include "test_util.h"

namespace ontomerge {
namespace {

using ::ontomerge::testing::id;
using ::ontomerge::testing::mapping;
using ::ontomerge::testing::onto;

struct Prepared {
  std::vector<Ontology> sources;
  CorrespondenceModel corr;
  MergeModel model;
};

Prepared prepare(std::vector<Ontology> sources,
                 const std::vector<MappingFile>& maps) {
  Prepared p{std::move(sources), {}, {}};
  p.corr = build_model(p.sources, maps);
  IdAllocator ids;
  p.model = naive_merge(p.sources, p.corr, ids);
  return p;
}

// a:C has three taxonomic and two non-taxonomic relations; b:C is isolated.
Prepared toy() {
  return prepare(
      {onto(R"(ONTOLOGY a
CLASS a:C
CLASS a:S1
CLASS a:S2
CLASS a:Top
OBJPROP a:p
OBJPROP a:q
SUBCLASS a:S1 a:C
SUBCLASS a:S2 a:C
SUBCLASS a:C a:Top
DOMAIN a:p a:C
RANGE a:q a:C
)"),
       onto("ONTOLOGY b\nCLASS b:C\nCLASS b:D\nCLASS b:E\n"
            "SUBCLASS b:D b:E\n")},
      {mapping("a:C\tb:C\na:Top\tb:E\n")});
}

TEST(ConnectivityTest, WeightedSum) {
  Prepared p = toy();
  EXPECT_DOUBLE_EQ(connectivity(p.model, id("merged:1"), Weights{}), 3.25);
  EXPECT_DOUBLE_EQ(connectivity(p.model, id("merged:1"), Weights{1.0, 0.0}),
                   3.0);
  EXPECT_THROW(connectivity(p.model, id("merged:1"), Weights{-1.0, 0.5}),
               Error);
}

TEST(ReputationTest, ConnectivityTimesCardinality) {
  Prepared p = toy();
  EXPECT_DOUBLE_EQ(reputation(p.model, p.corr.sets()[0], Weights{}), 6.5);
}

TEST(ReputationTest, NotIntegratedThrows) {
  Prepared p = toy();
  CorrespondenceSet stray{{id("a:S1"), id("b:D")}, EntityKind::kClass};
  try {
    reputation(p.model, stray, Weights{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIntegrated);
  }
}

TEST(FindPivotsTest, DescendingReputation) {
  Prepared p = toy();
  PivotList pivots = find_pivots(p.model, p.corr, Weights{});
  ASSERT_EQ(pivots.size(), 2u);
  EXPECT_DOUBLE_EQ(pivots[0].reputation, 6.5);
  EXPECT_EQ(pivots[0].integrated, id("merged:1"));
  // merged:2 = {a:Top, b:E}: two SubClassOf edges -> 1.5 * 2.
  EXPECT_DOUBLE_EQ(pivots[1].reputation, 3.0);
}

TEST(FindPivotsTest, TiesBrokenBySmallestMember) {
  Prepared p = prepare(
      {onto("ONTOLOGY a\nCLASS a:X\nCLASS a:Y\nCLASS a:Z\n"
            "SUBCLASS a:Y a:X\nSUBCLASS a:Z a:X\n"),
       onto("ONTOLOGY b\nCLASS b:Y\nCLASS b:Z\n")},
      {mapping("a:Z\tb:Z\na:Y\tb:Y\n")});
  PivotList pivots = find_pivots(p.model, p.corr, Weights{});
  ASSERT_EQ(pivots.size(), 2u);
  EXPECT_EQ(pivots[0].reputation, pivots[1].reputation);
  EXPECT_EQ(pivots[0].set.members[0], id("a:Y"));
}

TEST(FindPivotsTest, NoCorrespondencesFallsBackToComponents) {
  Prepared p = prepare({onto("ONTOLOGY a\nCLASS a:X\nCLASS a:Y\nCLASS a:Z\n"
                             "CLASS a:W\nCLASS a:I\nSUBCLASS a:X a:Y\n"
                             "SUBCLASS a:Z a:W\n")},
                       {});
  PivotList pivots = find_pivots(p.model, p.corr, Weights{});
  EXPECT_TRUE(pivots.empty());
  PartitionResult part = partition(p.model, pivots);
  EXPECT_EQ(part.k(), 2u);
  EXPECT_EQ(part.pivot_blocks, 0u);
  EXPECT_THAT(part.unassigned_classes, ::testing::ElementsAre(id("a:I")));
}

TEST(PartitionTest, SingleTaxonomyOneBlock) {
  Prepared p = toy();
  PartitionResult part =
      partition(p.model, find_pivots(p.model, p.corr, Weights{}));
  // Block 1 grows from merged:1 over S1, S2 and merged:2; b:D hangs off
  // merged:2 as well.
  ASSERT_EQ(part.k(), 1u);
  EXPECT_EQ(part.blocks[0].id, 1u);
  EXPECT_EQ(part.blocks[0].classes.size(), 5u);
  EXPECT_TRUE(part.unassigned_classes.empty());
  EXPECT_EQ(part.pivot_blocks, 1u);
}

TEST(PartitionTest, PivotWithoutTaxonomicEdgeSkipped) {
  Prepared p = prepare({onto("ONTOLOGY a\nCLASS a:X\nCLASS a:Y\nCLASS a:Z\n"
                             "SUBCLASS a:Y a:Z\n"),
                        onto("ONTOLOGY b\nCLASS b:X\n")},
                       {mapping("a:X\tb:X\n")});
  PartitionResult part =
      partition(p.model, find_pivots(p.model, p.corr, Weights{}));
  EXPECT_EQ(part.pivot_blocks, 0u);
  EXPECT_EQ(part.k(), 1u);
  EXPECT_THAT(part.unassigned_classes, ::testing::ElementsAre(id("merged:1")));
}

// Checks disjointness, totality, isolation and cohesion of `part`.
void expect_partition_laws(const MergeModel& model,
                           const PartitionResult& part) {
  std::set<EntityId> seen;
  for (const Block& b : part.blocks) {
    ASSERT_FALSE(b.classes.empty());
    for (const EntityId& c : b.classes) {
      EXPECT_TRUE(seen.insert(c).second) << "class in two blocks: " << c.iri;
    }
    // Cohesion: flood fill inside the block reaches every class.
    std::set<EntityId> reached{*b.classes.begin()};
    std::vector<EntityId> stack{*b.classes.begin()};
    while (!stack.empty()) {
      EntityId v = stack.back();
      stack.pop_back();
      for (const EntityId& w : taxonomic_neighbors(model.ontology, v)) {
        if (b.classes.count(w) && reached.insert(w).second) stack.push_back(w);
      }
    }
    EXPECT_EQ(reached, b.classes) << "block " << b.id << " is not connected";
  }
  for (const EntityId& c : part.unassigned_classes) {
    EXPECT_TRUE(seen.insert(c).second);
    EXPECT_EQ(connectivity_counts(model.ontology, c).taxonomic, 0u);
  }
  std::set<EntityId> classes;
  for (const auto& [key, e] : model.ontology.entities()) {
    if (e.kind == EntityKind::kClass) classes.insert(key);
  }
  EXPECT_EQ(seen, classes);
}

TEST(PartitionTest, LawsHoldOnGeneratedDatasets) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    FixtureParams params;
    params.n = 2 + seed % 5;
    params.size = 8 + 2 * seed;
    params.seed = seed;
    Fixture fx = generate_fixture(params);
    Prepared p = prepare(fx.ontologies, {fx.perfect});
    PivotList pivots = find_pivots(p.model, p.corr, Weights{});
    PartitionResult part = partition(p.model, pivots);
    SCOPED_TRACE(seed);
    expect_partition_laws(p.model, part);
    EXPECT_LE(part.pivot_blocks, pivots.size());

    // Permuting the ontology order changes nothing.
    std::vector<Ontology> reversed(fx.ontologies.rbegin(),
                                   fx.ontologies.rend());
    Prepared q = prepare(reversed, {fx.perfect});
    PartitionResult again =
        partition(q.model, find_pivots(q.model, q.corr, Weights{}));
    ASSERT_EQ(again.k(), part.k());
    for (std::size_t i = 0; i < part.k(); ++i) {
      EXPECT_EQ(again.blocks[i].classes, part.blocks[i].classes);
    }
    EXPECT_EQ(again.unassigned_classes, part.unassigned_classes);
  }
}

TEST(PartitionTest, Fig1BlockCountWithinPivotRange) {
  Fixture fx = fig1_fixture();
  Prepared p = prepare(fx.ontologies, {fx.perfect});
  PivotList pivots = find_pivots(p.model, p.corr, Weights{});
  PartitionResult part = partition(p.model, pivots);
  expect_partition_laws(p.model, part);
  EXPECT_GE(part.k(), 1u);
  EXPECT_LE(part.pivot_blocks, pivots.size());
}

TEST(OverlapRatioTest, DirectEnumeration) {
  Prepared none = prepare({onto("ONTOLOGY a\nCLASS a:X\n")}, {});
  EXPECT_EQ(overlap_ratio(none.corr, none.sources), 0.0);

  Prepared all = prepare({onto("ONTOLOGY a\nCLASS a:X\n"),
                          onto("ONTOLOGY b\nCLASS b:X\n")},
                         {mapping("a:X\tb:X\n")});
  EXPECT_EQ(overlap_ratio(all.corr, all.sources), 1.0);

  Prepared p = toy();
  // 4 corresponding classes out of 7 source classes.
  EXPECT_DOUBLE_EQ(overlap_ratio(p.corr, p.sources), 4.0 / 7.0);
}

}  // namespace
}  // namespace ontomerge
