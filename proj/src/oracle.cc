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

#include "triblock/oracle.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace triblock {

namespace {

class Matcher {
 public:
  Matcher(const Graph& h, const Graph& g, bool enumerate_all)
      : h_(h), g_(g), enumerate_all_(enumerate_all) {
    const int n = h.num_vertices();
    map_.assign(n, -1);
    used_.assign(n, 0);
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    // Rarer degrees first; ties by id.
    std::vector<int> freq(n, 0);
    for (Vertex v = 0; v < n; ++v) ++freq[h.Degree(v)];
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return freq[h.Degree(a)] < freq[h.Degree(b)];
    });
  }

  void Run(int depth) {
    ++nodes_;
    if (!enumerate_all_ && first_.has_value()) return;
    const int n = h_.num_vertices();
    if (depth == n) {
      ++count_;
      if (!first_) first_ = Permutation(map_);
      return;
    }
    const Vertex u = order_[depth];
    for (Vertex x = 0; x < n; ++x) {
      if (used_[x] || g_.Degree(x) != h_.Degree(u)) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const Vertex w = order_[d];
        ok = h_.Adjacent(u, w) == g_.Adjacent(x, map_[w]);
      }
      if (!ok) continue;
      map_[u] = x;
      used_[x] = 1;
      Run(depth + 1);
      used_[x] = 0;
      map_[u] = -1;
      if (!enumerate_all_ && first_.has_value()) return;
    }
  }

  OracleResult Result() const {
    OracleResult r;
    r.witness = first_;
    if (enumerate_all_) r.count = count_;
    r.nodes_explored = nodes_;
    return r;
  }

 private:
  const Graph& h_;
  const Graph& g_;
  bool enumerate_all_;
  std::vector<int> map_;
  std::vector<uint8_t> used_;
  std::vector<Vertex> order_;
  std::optional<Permutation> first_;
  int64_t count_ = 0;
  int64_t nodes_ = 0;
};

}  // namespace

OracleResult BruteForceIsomorphism(const Graph& g, const Graph& h,
                                   bool enumerate_all) {
  const int n = g.num_vertices();
  if (n > kOracleHardMaxN || h.num_vertices() > kOracleHardMaxN) {
    throw OracleRefused("oracle refuses graphs with more than " +
                        std::to_string(kOracleHardMaxN) + " vertices");
  }
  if (n != h.num_vertices() || g.num_edges() != h.num_edges()) {
    OracleResult r;
    if (enumerate_all) r.count = 0;
    return r;
  }
  Matcher matcher(h, g, enumerate_all);
  matcher.Run(0);
  return matcher.Result();
}

OracleResult BruteForceAutomorphisms(const Graph& g) {
  return BruteForceIsomorphism(g, g, /*enumerate_all=*/true);
}

namespace {

bool Cover(const Graph& g, std::vector<uint8_t>& covered, int remaining) {
  if (remaining == 0) return true;
  const int n = g.num_vertices();
  Vertex u = 0;
  while (covered[u]) ++u;
  covered[u] = 1;
  for (Vertex v = u + 1; v < n; ++v) {
    if (covered[v] || !g.Adjacent(u, v)) continue;
    covered[v] = 1;
    for (Vertex w = v + 1; w < n; ++w) {
      if (covered[w] || !g.Adjacent(u, w) || !g.Adjacent(v, w)) continue;
      covered[w] = 1;
      if (Cover(g, covered, remaining - 3)) return true;
      covered[w] = 0;
    }
    covered[v] = 0;
  }
  covered[u] = 0;
  return false;
}

}  // namespace

bool TrianglePartitionExists(const Graph& g) {
  const int n = g.num_vertices();
  if (n % 3 != 0) return false;
  std::vector<uint8_t> covered(n, 0);
  return Cover(g, covered, n);
}

}  // namespace triblock
