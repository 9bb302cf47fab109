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

// Exhaustive ground truth for small graphs. Nothing here shares code with
// the arrangement pipeline beyond the Graph type.

#ifndef TRIBLOCK_ORACLE_H_
#define TRIBLOCK_ORACLE_H_

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "triblock/graph.h"
#include "triblock/permgroup.h"

namespace triblock {

inline constexpr int kOracleRecommendedMaxN = 12;
inline constexpr int kOracleHardMaxN = 16;

class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  // Maps h onto g: ApplyPermutation(h, *witness) == g.
  std::optional<Permutation> witness;
  // Number of isomorphisms; only set when enumeration was requested.
  std::optional<int64_t> count;
  int64_t nodes_explored = 0;
};

// Backtracking over vertex assignments with degree and partial-adjacency
// pruning. Throws OracleRefused above kOracleHardMaxN vertices.
OracleResult BruteForceIsomorphism(const Graph& g, const Graph& h,
                                   bool enumerate_all);

OracleResult BruteForceAutomorphisms(const Graph& g);

// Exhaustive search for a partition of the vertices into disjoint
// triangles. False whenever 3 does not divide n.
bool TrianglePartitionExists(const Graph& g);

}  // namespace triblock

#endif  // TRIBLOCK_ORACLE_H_
