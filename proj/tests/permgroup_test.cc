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

#include "triblock/permgroup.h"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "test_graphs.h"

namespace triblock {
namespace {

using ::triblock::testing::AllPermutations;
using ::triblock::testing::NaiveGroup;

TEST(PermutationTest, ComposeInverseIdentity) {
  const Permutation c3 = Permutation::FromCycles(3, "(0 1 2)");
  EXPECT_EQ(Compose(Permutation::Identity(3), c3), c3);
  const Permutation swap = Permutation::FromCycles(3, "(0 1)");
  EXPECT_EQ(Inverse(swap), swap);
  // (0 1 2) twice sends 0 -> 2 -> ... pointwise: 0->2, 1->0, 2->1.
  EXPECT_EQ(Compose(c3, c3), Permutation({2, 0, 1}));
  EXPECT_EQ(Compose(c3, c3), Permutation::FromCycles(3, "(0 2 1)"));
  EXPECT_EQ(Compose(c3, Inverse(c3)), Permutation::Identity(3));
  EXPECT_THROW(Compose(c3, Permutation::Identity(4)), std::invalid_argument);
}

TEST(PermutationTest, ComposeAppliesRightOperandFirst) {
  const Permutation a = Permutation::FromCycles(3, "(0 1)");
  const Permutation b = Permutation::FromCycles(3, "(1 2)");
  const Permutation ab = Compose(a, b);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(ab[i], a[b[i]]);
}

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 3, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation::FromCycles(3, "(0 5)"), std::invalid_argument);
  EXPECT_THROW(Permutation::FromCycles(3, "(0 1"), std::invalid_argument);
}

TEST(PermutationTest, CycleStringRoundTrip) {
  for (const Permutation& p : AllPermutations(5)) {
    EXPECT_EQ(Permutation::FromCycles(5, p.ToCycleString()), p);
  }
  EXPECT_EQ(Permutation::Identity(4).ToCycleString(), "()");
}

PartialMap Map(int n, std::initializer_list<std::pair<int, int>> entries) {
  PartialMap m(n);
  for (auto [p, v] : entries) m.Assign(p, v);
  return m;
}

TEST(DirectProductTest, Examples) {
  const auto joined = DirectProduct(Map(10, {{3, 5}}), Map(10, {{2, 8}, {1, 9}}));
  ASSERT_TRUE(joined.has_value());
  EXPECT_EQ(*joined, Map(10, {{3, 5}, {2, 8}, {1, 9}}));

  EXPECT_FALSE(DirectProduct(Map(10, {{3, 5}}), Map(10, {{2, 5}})).has_value());
  EXPECT_THROW(DirectProduct(Map(10, {{3, 5}}), Map(10, {{3, 6}})),
               std::invalid_argument);
}

TEST(DirectProductTest, RestrictionsRecoverOperands) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> vertices(9);
    std::iota(vertices.begin(), vertices.end(), 0);
    std::shuffle(vertices.begin(), vertices.end(), rng);
    PartialMap a(9);
    PartialMap b(9);
    for (int p = 1; p <= 9; ++p) {
      const int coin = static_cast<int>(rng() % 3);
      if (coin == 0) a.Assign(p, vertices[p - 1]);
      if (coin == 1) b.Assign(p, vertices[p - 1]);
    }
    const auto ab = DirectProduct(a, b);
    ASSERT_TRUE(ab.has_value());
    for (int p = 1; p <= 9; ++p) {
      if (a.Contains(p)) EXPECT_EQ(ab->Image(p), a.Image(p));
      if (b.Contains(p)) EXPECT_EQ(ab->Image(p), b.Image(p));
      if (!a.Contains(p) && !b.Contains(p)) EXPECT_FALSE(ab->Contains(p));
    }
  }
}

TEST(PartialMapTest, RejectsReuse) {
  PartialMap m(4);
  m.Assign(1, 2);
  EXPECT_THROW(m.Assign(1, 3), std::invalid_argument);
  EXPECT_THROW(m.Assign(2, 2), std::invalid_argument);
  EXPECT_THROW(m.Assign(5, 0), std::out_of_range);
  EXPECT_EQ(m.Support(), std::vector<int>{1});
  EXPECT_FALSE(m.IsTotal());
}

TEST(ReduceGeneratorsTest, IdentityVanishes) {
  const std::vector<Permutation> perms = {Permutation::Identity(4)};
  EXPECT_TRUE(ReduceGenerators(perms, 4).generators.empty());
}

TEST(ReduceGeneratorsTest, SymmetricGroupOnThreePoints) {
  const std::vector<Permutation> perms = {
      Permutation::FromCycles(3, "(0 1)"), Permutation::FromCycles(3, "(0 1 2)")};
  const GenSet s = ReduceGenerators(perms, 3);
  EXPECT_LE(s.generators.size(), 2u);
  const auto closure = Closure(s, 100);
  ASSERT_TRUE(closure.has_value());
  const std::set<Permutation> got(closure->begin(), closure->end());
  const std::vector<Permutation> s3 = AllPermutations(3);
  EXPECT_EQ(got, std::set<Permutation>(s3.begin(), s3.end()));
}

TEST(ReduceGeneratorsTest, DuplicatesCollapse) {
  const std::vector<Permutation> perms = {Permutation::FromCycles(3, "(0 1)"),
                                          Permutation::FromCycles(3, "(0 1)")};
  const GenSet s = ReduceGenerators(perms, 3);
  EXPECT_EQ(s.generators.size(), 1u);
  EXPECT_EQ(Closure(s, 10)->size(), 2u);
}

TEST(ReduceGeneratorsTest, MixedSizesRejected) {
  const std::vector<Permutation> perms = {Permutation::Identity(3),
                                          Permutation::Identity(4)};
  EXPECT_THROW(ReduceGenerators(perms, 3), std::invalid_argument);
}

// Random generator sets on up to 7 points: the reduced set is small and
// generates the same group, which is checked against a naive fixpoint
// closure of the input.
TEST(ReduceGeneratorsTest, PreservesGroupAndBound) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int count = 1 + static_cast<int>(rng() % 8);
    std::vector<Permutation> perms;
    for (int c = 0; c < count; ++c) {
      std::vector<int> images(n);
      std::iota(images.begin(), images.end(), 0);
      // Sparse permutations give a mix of small and large groups.
      const int swaps = 1 + static_cast<int>(rng() % 2);
      for (int s = 0; s < swaps; ++s) {
        std::swap(images[rng() % n], images[rng() % n]);
      }
      perms.emplace_back(images);
    }
    const GenSet reduced = ReduceGenerators(perms, n);
    EXPECT_LE(static_cast<int>(reduced.generators.size()), n - 1);
    EXPECT_LE(static_cast<double>(reduced.generators.size()),
              Log2Factorial(n) + 1e-9);
    for (const Permutation& g : reduced.generators) EXPECT_FALSE(g.IsIdentity());
    const auto closure = Closure(reduced, 5040);
    ASSERT_TRUE(closure.has_value());
    const std::set<Permutation> got(closure->begin(), closure->end());
    EXPECT_EQ(got, NaiveGroup(perms, n)) << "trial " << trial;
  }
}

TEST(ClosureTest, Examples) {
  GenSet empty;
  empty.n = 4;
  ASSERT_TRUE(Closure(empty, 1).has_value());
  EXPECT_EQ(Closure(empty, 1)->size(), 1u);

  GenSet cyclic;
  cyclic.n = 3;
  cyclic.generators = {Permutation::FromCycles(3, "(0 1 2)")};
  EXPECT_EQ(Closure(cyclic, 10)->size(), 3u);

  GenSet s3;
  s3.n = 3;
  s3.generators = {Permutation::FromCycles(3, "(0 1)"),
                   Permutation::FromCycles(3, "(0 1 2)")};
  EXPECT_FALSE(Closure(s3, 5).has_value());
  EXPECT_EQ(Closure(s3, 6)->size(), 6u);
}

TEST(Log2FactorialTest, SmallValues) {
  EXPECT_NEAR(Log2Factorial(1), 0.0, 1e-12);
  EXPECT_NEAR(Log2Factorial(2), 1.0, 1e-12);
  EXPECT_NEAR(Log2Factorial(4), std::log2(24.0), 1e-12);
}

}  // namespace
}  // namespace triblock
