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

// Splits a graph into consecutive triangle blocks by repeated neighborhood
// labeling.
//
// Block k (1-based) occupies arrangement positions [i_k, j_k] with
// i_k = 3k - 2 and j_k = 3k. The block is grown from an anchor vertex a, a
// neighbor b of a, and a common neighbor c of both; a goes to position j_k,
// b to j_k - 1 and c to i_k. The first anchor is the caller's seed; later
// anchors are the first unlabeled vertex under the tie-break policy. Choices
// of b and c are chronologically backtracked so a tiling is found whenever
// one exists.

#ifndef TRIBLOCK_REARRANGE_H_
#define TRIBLOCK_REARRANGE_H_

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "triblock/graph.h"

namespace triblock {

enum class TieBreak {
  kLowestFirst,
  kHighestFirst,
};

struct Block {
  int k = 0;  // 1-based
  int i = 0;  // first position, 1-based
  int j = 0;  // last position, i + 2 == j
  // Vertices at positions j, j-1, i, in that order.
  std::array<Vertex, 3> vertices{};
};

struct Arrangement {
  int n = 0;
  // w[p - 1] is the vertex at position p.
  std::vector<Vertex> w;
  std::vector<Block> blocks;

  int num_blocks() const { return static_cast<int>(blocks.size()); }
  Vertex AtPosition(int position) const { return w[position - 1]; }
};

struct Infeasible {
  enum class Reason {
    kNotDivisibleBy3,
    kNoTriangleBlock,
  };
  Reason reason = Reason::kNoTriangleBlock;
  // Deepest block the search could not complete (kNoTriangleBlock only).
  int at_block = 0;
  // Set when no vertex of the graph lies on any triangle.
  bool triangle_free = false;
};

std::string ReasonCode(Infeasible::Reason reason);

using RearrangeResult = std::variant<Arrangement, Infeasible>;

// First arrangement reachable from `seed`. Throws std::out_of_range if
// seed >= g.num_vertices().
RearrangeResult Rearrange(const Graph& g, Vertex seed,
                          TieBreak policy = TieBreak::kLowestFirst);

// Yields every arrangement reachable from one seed, in backtracking order,
// without repetition. Blocks are emitted with b before c in policy order, so
// each unordered triangle appears in one orientation per anchor.
class ArrangementEnumerator {
 public:
  ArrangementEnumerator(const Graph& g, Vertex seed,
                        TieBreak policy = TieBreak::kLowestFirst);
  ~ArrangementEnumerator();
  ArrangementEnumerator(ArrangementEnumerator&&) noexcept;
  ArrangementEnumerator& operator=(ArrangementEnumerator&&) noexcept;

  std::optional<Arrangement> Next();

  // Failure description once Next() has returned nullopt without ever
  // producing an arrangement.
  Infeasible failure() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

// Induced subgraph on block k's three vertices, in block order (positions
// j, j-1, i). Throws std::out_of_range unless 1 <= k <= a.num_blocks().
Graph BlockPattern(const Arrangement& a, const Graph& g, int k);

// Checks every structural invariant of an arrangement against g.
bool IsValidArrangement(const Arrangement& a, const Graph& g);

}  // namespace triblock

#endif  // TRIBLOCK_REARRANGE_H_
