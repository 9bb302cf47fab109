// Copyright 2026 The Triblock Authors
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

#include "triblock/rearrange.h"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "test_graphs.h"
#include "triblock/fuzz.h"
#include "triblock/oracle.h"

namespace triblock {
namespace {

using ::triblock::testing::Cycle;
using ::triblock::testing::K3;
using ::triblock::testing::K33;
using ::triblock::testing::Petersen;
using ::triblock::testing::Prism;
using ::triblock::testing::TrianglesNaive;

std::set<Vertex> BlockSet(const Block& b) {
  return {b.vertices.begin(), b.vertices.end()};
}

TEST(RearrangeTest, TriangleIsOneBlock) {
  const RearrangeResult r = Rearrange(K3(), 0);
  ASSERT_TRUE(std::holds_alternative<Arrangement>(r));
  const Arrangement& a = std::get<Arrangement>(r);
  ASSERT_EQ(a.num_blocks(), 1);
  EXPECT_EQ(a.blocks[0].i, 1);
  EXPECT_EQ(a.blocks[0].j, 3);
  EXPECT_EQ(a.blocks[0].vertices, (std::array<Vertex, 3>{0, 1, 2}));
  EXPECT_EQ(a.AtPosition(3), 0);  // the seed sits at j
  EXPECT_TRUE(IsValidArrangement(a, K3()));
}

TEST(RearrangeTest, PrismUsesItsOnlyTrianglePair) {
  // Brute-force triangle scan: the prism has exactly the triangles
  // {0,1,2} and {3,4,5}.
  const auto triangles = TrianglesNaive(Prism());
  ASSERT_EQ(triangles.size(), 2u);

  const RearrangeResult r = Rearrange(Prism(), 0);
  ASSERT_TRUE(std::holds_alternative<Arrangement>(r));
  const Arrangement& a = std::get<Arrangement>(r);
  ASSERT_EQ(a.num_blocks(), 2);
  EXPECT_EQ(BlockSet(a.blocks[0]), (std::set<Vertex>{0, 1, 2}));
  EXPECT_EQ(BlockSet(a.blocks[1]), (std::set<Vertex>{3, 4, 5}));
  EXPECT_EQ(a.blocks[1].i, 4);
  EXPECT_EQ(a.blocks[1].j, 6);
  EXPECT_TRUE(IsValidArrangement(a, Prism()));
}

TEST(RearrangeTest, NotDivisibleByThree) {
  for (const Graph& g : {Cycle(5), Petersen()}) {
    const RearrangeResult r = Rearrange(g, 0);
    ASSERT_TRUE(std::holds_alternative<Infeasible>(r));
    EXPECT_EQ(std::get<Infeasible>(r).reason,
              Infeasible::Reason::kNotDivisibleBy3);
    EXPECT_TRUE(std::get<Infeasible>(r).triangle_free);
  }
}

TEST(RearrangeTest, TriangleFreeFailsAtFirstBlock) {
  for (const Graph& g : {Cycle(6), K33()}) {
    const RearrangeResult r = Rearrange(g, 0);
    ASSERT_TRUE(std::holds_alternative<Infeasible>(r));
    const Infeasible& f = std::get<Infeasible>(r);
    EXPECT_EQ(f.reason, Infeasible::Reason::kNoTriangleBlock);
    EXPECT_EQ(f.at_block, 1);
    EXPECT_TRUE(f.triangle_free);
  }
}

TEST(RearrangeTest, BacktracksPastDeadEnds) {
  // The first choice {0,1,2} strands vertex 3; backtracking has to reach
  // the tiling {0,2,3}, {1,4,5}.
  const Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {2, 3},
                    {1, 4}, {1, 5}, {4, 5}});
  ASSERT_TRUE(TrianglePartitionExists(g));
  const RearrangeResult r = Rearrange(g, 0);
  ASSERT_TRUE(std::holds_alternative<Arrangement>(r));
  const Arrangement& a = std::get<Arrangement>(r);
  EXPECT_TRUE(IsValidArrangement(a, g));
  EXPECT_EQ(BlockSet(a.blocks[0]), (std::set<Vertex>{0, 2, 3}));
}

TEST(RearrangeTest, PartialTilingReportsDeepestBlock) {
  // Triangle {0,1,2} plus a triangle-free path 3-4-5.
  const Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}});
  const RearrangeResult r = Rearrange(g, 0);
  ASSERT_TRUE(std::holds_alternative<Infeasible>(r));
  EXPECT_EQ(std::get<Infeasible>(r).at_block, 2);
  EXPECT_FALSE(std::get<Infeasible>(r).triangle_free);
}

TEST(RearrangeTest, SeedOutOfRange) {
  EXPECT_THROW(Rearrange(K3(), 3), std::out_of_range);
  EXPECT_THROW(Rearrange(K3(), -1), std::out_of_range);
}

TEST(RearrangeTest, HighestFirstPolicy) {
  const RearrangeResult r = Rearrange(Prism(), 5, TieBreak::kHighestFirst);
  ASSERT_TRUE(std::holds_alternative<Arrangement>(r));
  const Arrangement& a = std::get<Arrangement>(r);
  EXPECT_TRUE(IsValidArrangement(a, Prism()));
  EXPECT_EQ(a.blocks[0].vertices, (std::array<Vertex, 3>{5, 4, 3}));
}

TEST(RearrangeTest, DeterministicAndValidOnRandomGraphs) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 * (1 + static_cast<int>(rng() % 4));
    const Graph g = RandomTriangleTiledGraph(n, 0.25, rng);
    const Vertex seed = static_cast<Vertex>(rng() % n);
    const RearrangeResult first = Rearrange(g, seed);
    const RearrangeResult second = Rearrange(g, seed);
    ASSERT_TRUE(std::holds_alternative<Arrangement>(first));
    const Arrangement& a = std::get<Arrangement>(first);
    EXPECT_TRUE(IsValidArrangement(a, g));
    EXPECT_EQ(a.AtPosition(3), seed);
    EXPECT_EQ(a.w, std::get<Arrangement>(second).w);
    for (int k = 1; k <= a.num_blocks(); ++k) {
      EXPECT_EQ(BlockPattern(a, g, k), K3());
    }
  }
}

TEST(ArrangementEnumeratorTest, ProducesDistinctValidArrangements) {
  const Graph g = testing::Octahedron();
  ArrangementEnumerator it(g, 0);
  std::set<std::vector<Vertex>> seen;
  while (auto a = it.Next()) {
    EXPECT_TRUE(IsValidArrangement(*a, g));
    EXPECT_TRUE(seen.insert(a->w).second);
  }
  // Seed 0 lies on 4 triangles. Each leaves the opposite triangle, which is
  // emitted in a single orientation.
  EXPECT_EQ(seen.size(), 4u);
  EXPECT_FALSE(it.Next().has_value());
}

TEST(BlockPatternTest, Examples) {
  const Arrangement k3 = std::get<Arrangement>(Rearrange(K3(), 0));
  EXPECT_EQ(BlockPattern(k3, K3(), 1), K3());
  const Arrangement prism = std::get<Arrangement>(Rearrange(Prism(), 0));
  EXPECT_EQ(BlockPattern(prism, Prism(), 2), K3());
  EXPECT_THROW(BlockPattern(prism, Prism(), 0), std::out_of_range);
  EXPECT_THROW(BlockPattern(prism, Prism(), 3), std::out_of_range);
}

// rearrange success for some seed implies a triangle partition exists, and
// on these graphs the converse holds too because backtracking is complete.
TEST(RearrangeTest, AgreesWithPartitionOracleOnSmallGraphs) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 * (1 + static_cast<int>(rng() % 4));
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng() % 100 < 45) edges.emplace_back(u, v);
      }
    }
    const Graph g(n, edges);
    const bool feasible =
        std::holds_alternative<Arrangement>(Rearrange(g, 0));
    EXPECT_EQ(feasible, TrianglePartitionExists(g)) << ToEdgeList(g);
  }
}

}  // namespace
}  // namespace triblock
