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

// Candidate assignments of target-graph vertices to one block's positions.
//
// The search tree for a block has three levels under the root: level 1 holds
// every vertex u (position j), level 2 the neighbors w of u (position j-1),
// and level 3 the common neighbors of u and w (position i). Each
// root-to-leaf path is therefore an ordered triangle of the target graph.

#ifndef TRIBLOCK_CANDIDATES_H_
#define TRIBLOCK_CANDIDATES_H_

#include <array>
#include <cstdint>
#include <vector>

#include "triblock/graph.h"
#include "triblock/permgroup.h"
#include "triblock/rearrange.h"

namespace triblock {

struct SearchTreeNode {
  Vertex vertex = -1;
  std::vector<SearchTreeNode> children;
};

struct SearchTree {
  // Children of the (implicit) root; one per vertex of the target graph.
  std::vector<SearchTreeNode> level1;

  int64_t NumLeaves() const;
  // Root-to-leaf paths as (level1, level2, level3) vertices, in tree order.
  std::vector<std::array<Vertex, 3>> Paths() const;
};

// The tree does not depend on the block beyond its shape, which is always a
// triangle here.
SearchTree BuildSearchTree(const Graph& h);

struct CandidateSet {
  int k = 0;
  std::vector<PartialMap> maps;

  int64_t size() const { return static_cast<int64_t>(maps.size()); }
};

// One map {j -> a, j-1 -> b, i -> c} per root-to-leaf path a-b-c.
// Throws std::invalid_argument if the block positions do not fit h.
CandidateSet EnumerateBeta(const SearchTree& tree, const Block& block,
                           int n);

// Ordered triangles of h (every root-to-leaf path), computed directly.
std::vector<std::array<Vertex, 3>> OrderedTriangles(const Graph& h);

// Candidate sets for every block of `a`, sharing one ordered-triangle list.
std::vector<CandidateSet> EnumerateAllBetas(const Graph& h,
                                            const Arrangement& a);

}  // namespace triblock

#endif  // TRIBLOCK_CANDIDATES_H_
