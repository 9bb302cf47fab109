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

// Simple undirected graphs over vertices 0..n-1, plus the handful of
// predicates and transformations the rest of the library builds on.

#ifndef TRIBLOCK_GRAPH_H_
#define TRIBLOCK_GRAPH_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace triblock {

using Vertex = int;

// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

class Permutation;

// Raised by ParseEdgeList(). The message always names the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Immutable simple graph. Stores both a dense adjacency matrix (O(1) edge
// tests) and sorted adjacency lists (neighborhood iteration).
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on self-loops, duplicate edges or
  // out-of-range endpoints.
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(),
                                                            edges.size())) {}

  int num_vertices() const { return n_; }
  int64_t num_edges() const { return num_edges_; }

  bool Adjacent(Vertex u, Vertex v) const {
    return adj_[static_cast<size_t>(u) * n_ + v] != 0;
  }
  // Same as Adjacent() but range-checked.
  bool HasEdge(Vertex u, Vertex v) const;

  const std::vector<Vertex>& Neighbors(Vertex v) const;
  int Degree(Vertex v) const { return static_cast<int>(Neighbors(v).size()); }

  // Edges as (u, v) pairs with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> Edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void CheckVertex(Vertex v) const;

  int n_ = 0;
  int64_t num_edges_ = 0;
  std::vector<uint8_t> adj_;
  std::vector<std::vector<Vertex>> neighbors_;
};

// Edge-list text format: first non-comment line "n m", then m lines "u v".
// Lines starting with '#' and blank lines are ignored.
Graph ParseEdgeList(std::string_view text);
Graph ReadEdgeListFile(const std::string& path);
std::string ToEdgeList(const Graph& g);

VertexSet OpenNeighborhood(const Graph& g, Vertex v);
VertexSet ClosedNeighborhood(const Graph& g, Vertex v);

// Vertices are relabeled 0..|s|-1 following the sorted order of `s`.
Graph InducedSubgraph(const Graph& g, const VertexSet& s);

// The empty graph counts as connected.
bool IsConnected(const Graph& g);
bool IsRegular(const Graph& g);

// True iff the open neighborhood of v contains an edge, i.e. v lies on a
// triangle.
bool VertexInTriangle(const Graph& g, Vertex v);

// Number of unordered triangles.
int64_t CountTriangles(const Graph& g);

std::vector<int> SortedDegrees(const Graph& g);

// Result has edge (p(u), p(v)) iff g has edge (u, v).
Graph ApplyPermutation(const Graph& g, const Permutation& p);

// Edge-by-edge check that ApplyPermutation(h, p) == g, without building the
// permuted graph.
bool IsIsomorphismWitness(const Graph& h, const Graph& g,
                          const Permutation& p);

}  // namespace triblock

#endif  // TRIBLOCK_GRAPH_H_
