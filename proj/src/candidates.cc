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

#include "triblock/candidates.h"

#include <stdexcept>

namespace triblock {

int64_t SearchTree::NumLeaves() const {
  int64_t leaves = 0;
  for (const auto& a : level1) {
    for (const auto& b : a.children) leaves += b.children.size();
  }
  return leaves;
}

std::vector<std::array<Vertex, 3>> SearchTree::Paths() const {
  std::vector<std::array<Vertex, 3>> out;
  for (const auto& a : level1) {
    for (const auto& b : a.children) {
      for (const auto& c : b.children) {
        out.push_back({a.vertex, b.vertex, c.vertex});
      }
    }
  }
  return out;
}

SearchTree BuildSearchTree(const Graph& h) {
  SearchTree tree;
  tree.level1.resize(h.num_vertices());
  for (Vertex u = 0; u < h.num_vertices(); ++u) {
    SearchTreeNode& first = tree.level1[u];
    first.vertex = u;
    for (Vertex w : h.Neighbors(u)) {
      SearchTreeNode second;
      second.vertex = w;
      // Neighbors of w are never w itself; skipping u keeps the path simple.
      for (Vertex c : h.Neighbors(w)) {
        if (c != u && h.Adjacent(c, u)) second.children.push_back({c, {}});
      }
      first.children.push_back(std::move(second));
    }
  }
  return tree;
}

namespace {

CandidateSet FromPaths(const std::vector<std::array<Vertex, 3>>& paths,
                       const Block& block, int n) {
  if (block.i < 1 || block.j > n || block.i + 2 != block.j) {
    throw std::invalid_argument("block positions do not fit the graph");
  }
  CandidateSet out;
  out.k = block.k;
  out.maps.reserve(paths.size());
  for (const auto& [a, b, c] : paths) {
    PartialMap m(n);
    m.Assign(block.j, a);
    m.Assign(block.j - 1, b);
    m.Assign(block.i, c);
    out.maps.push_back(std::move(m));
  }
  return out;
}

}  // namespace

CandidateSet EnumerateBeta(const SearchTree& tree, const Block& block,
                           int n) {
  return FromPaths(tree.Paths(), block, n);
}

std::vector<std::array<Vertex, 3>> OrderedTriangles(const Graph& h) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex u = 0; u < h.num_vertices(); ++u) {
    for (Vertex w : h.Neighbors(u)) {
      for (Vertex c : h.Neighbors(w)) {
        if (c != u && h.Adjacent(c, u)) out.push_back({u, w, c});
      }
    }
  }
  return out;
}

std::vector<CandidateSet> EnumerateAllBetas(const Graph& h,
                                            const Arrangement& a) {
  const auto paths = OrderedTriangles(h);
  std::vector<CandidateSet> out;
  out.reserve(a.blocks.size());
  for (const Block& block : a.blocks) {
    out.push_back(FromPaths(paths, block, h.num_vertices()));
  }
  return out;
}

}  // namespace triblock
