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

#include "triblock/graph.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "triblock/permgroup.h"

namespace triblock {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
    : n_(n),
      adj_(static_cast<size_t>(n) * n, 0),
      neighbors_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (const auto& [u, v] : edges) {
    CheckVertex(u);
    CheckVertex(v);
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    uint8_t& cell = adj_[static_cast<size_t>(u) * n_ + v];
    if (cell) {
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    cell = 1;
    adj_[static_cast<size_t>(v) * n_ + u] = 1;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    ++num_edges_;
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
}

void Graph::CheckVertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for n=" + std::to_string(n_));
  }
}

bool Graph::HasEdge(Vertex u, Vertex v) const {
  CheckVertex(u);
  CheckVertex(v);
  return Adjacent(u, v);
}

const std::vector<Vertex>& Graph::Neighbors(Vertex v) const {
  CheckVertex(v);
  return neighbors_[v];
}

std::vector<std::pair<Vertex, Vertex>> Graph::Edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

// Splits a line into whitespace-separated integer tokens. Returns false on
// any token that is not a non-negative integer.
bool ParseInts(std::string_view line, std::vector<long long>* out) {
  out->clear();
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i == line.size()) break;
    size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j || value < 0) return false;
    out->push_back(value);
    i = j;
  }
  return true;
}

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<uint8_t> seen;
  std::vector<long long> ints;

  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!ParseInts(line, &ints) || ints.size() != 2) {
      throw ParseError(line_no, have_header
                                    ? "expected edge \"u v\""
                                    : "expected header \"n m\"");
    }
    if (!have_header) {
      n = ints[0];
      m = ints[1];
      if (n > (1 << 16)) throw ParseError(line_no, "vertex count too large");
      if (m > n * (n - 1) / 2) {
        throw ParseError(line_no, "edge count exceeds n(n-1)/2");
      }
      seen.assign(static_cast<size_t>(n) * n, 0);
      have_header = true;
    } else {
      const long long u = ints[0];
      const long long v = ints[1];
      if (u >= n || v >= n) {
        throw ParseError(line_no, "vertex index out of range (n=" +
                                      std::to_string(n) + ")");
      }
      if (u == v) throw ParseError(line_no, "self-loop");
      uint8_t& cell = seen[u * n + v];
      if (cell) throw ParseError(line_no, "duplicate edge");
      cell = 1;
      seen[v * n + u] = 1;
      if (static_cast<long long>(edges.size()) == m) {
        throw ParseError(line_no, "more edges than declared in header");
      }
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing header \"n m\"");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) +
                                  " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), edges);
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseEdgeList(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

std::string ToEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.Edges()) out << u << ' ' << v << '\n';
  return out.str();
}

VertexSet OpenNeighborhood(const Graph& g, Vertex v) {
  return g.Neighbors(v);
}

VertexSet ClosedNeighborhood(const Graph& g, Vertex v) {
  VertexSet out = g.Neighbors(v);
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

Graph InducedSubgraph(const Graph& g, const VertexSet& s) {
  VertexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("vertex set has duplicates");
  }
  for (Vertex v : sorted) {
    if (v < 0 || v >= g.num_vertices()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  const int k = static_cast<int>(sorted.size());
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (g.Adjacent(sorted[a], sorted[b])) edges.emplace_back(a, b);
    }
  }
  return Graph(k, edges);
}

bool IsConnected(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  std::vector<uint8_t> seen(n, 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.Neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

bool IsRegular(const Graph& g) {
  for (Vertex v = 1; v < g.num_vertices(); ++v) {
    if (g.Degree(v) != g.Degree(0)) return false;
  }
  return true;
}

bool VertexInTriangle(const Graph& g, Vertex v) {
  const auto& nbrs = g.Neighbors(v);
  for (size_t a = 0; a < nbrs.size(); ++a) {
    for (size_t b = a + 1; b < nbrs.size(); ++b) {
      if (g.Adjacent(nbrs[a], nbrs[b])) return true;
    }
  }
  return false;
}

int64_t CountTriangles(const Graph& g) {
  int64_t count = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.Neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.Neighbors(v)) {
        if (w > v && g.Adjacent(u, w)) ++count;
      }
    }
  }
  return count;
}

std::vector<int> SortedDegrees(const Graph& g) {
  std::vector<int> degrees(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) degrees[v] = g.Degree(v);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

Graph ApplyPermutation(const Graph& g, const Permutation& p) {
  if (p.size() != g.num_vertices()) {
    throw std::invalid_argument("permutation size does not match graph");
  }
  std::vector<std::pair<Vertex, Vertex>> edges = g.Edges();
  for (auto& [u, v] : edges) {
    u = p[u];
    v = p[v];
  }
  return Graph(g.num_vertices(), edges);
}

bool IsIsomorphismWitness(const Graph& h, const Graph& g,
                          const Permutation& p) {
  const int n = h.num_vertices();
  if (g.num_vertices() != n || p.size() != n) return false;
  if (g.num_edges() != h.num_edges()) return false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (h.Adjacent(u, v) != g.Adjacent(p[u], p[v])) return false;
    }
  }
  return true;
}

}  // namespace triblock
