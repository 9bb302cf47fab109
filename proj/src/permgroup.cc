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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace triblock {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<uint8_t> seen(n, 0);
  for (int image : images_) {
    if (image < 0 || image >= n || seen[image]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[image] = 1;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::FromCycles(int n, std::string_view cycles) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  std::vector<int> current;
  bool open = false;
  auto close_cycle = [&]() {
    for (size_t i = 0; i < current.size(); ++i) {
      images[current[i]] = current[(i + 1) % current.size()];
    }
    current.clear();
  };
  size_t i = 0;
  while (i < cycles.size()) {
    const char c = cycles[i];
    if (c == '(') {
      if (open) throw std::invalid_argument("nested '(' in cycle notation");
      open = true;
      ++i;
    } else if (c == ')') {
      if (!open) throw std::invalid_argument("unbalanced ')'");
      close_cycle();
      open = false;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      int value = 0;
      while (i < cycles.size() &&
             std::isdigit(static_cast<unsigned char>(cycles[i]))) {
        value = value * 10 + (cycles[i] - '0');
        ++i;
      }
      if (!open || value >= n) {
        throw std::invalid_argument("bad point in cycle notation");
      }
      current.push_back(value);
    } else if (c == ' ' || c == ',') {
      ++i;
    } else {
      throw std::invalid_argument("unexpected character in cycle notation");
    }
  }
  if (open) throw std::invalid_argument("unterminated cycle");
  return Permutation(std::move(images));
}

bool Permutation::IsIdentity() const { return FirstMovedPoint() < 0; }

int Permutation::FirstMovedPoint() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[i] != i) return i;
  }
  return -1;
}

std::string Permutation::ToCycleString() const {
  std::ostringstream out;
  std::vector<uint8_t> done(size(), 0);
  for (int start = 0; start < size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out << '(';
    int i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = 1;
      if (!first) out << ' ';
      out << i;
      first = false;
      i = images_[i];
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

Permutation Compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("composing permutations of different sizes");
  }
  std::vector<int> images(a.size());
  for (int i = 0; i < a.size(); ++i) images[i] = a[b[i]];
  return Permutation(std::move(images));
}

Permutation Inverse(const Permutation& a) {
  std::vector<int> images(a.size());
  for (int i = 0; i < a.size(); ++i) images[a[i]] = i;
  return Permutation(std::move(images));
}

void PartialMap::Assign(int position, int vertex) {
  if (position < 1 || position > num_positions()) {
    throw std::out_of_range("position out of range");
  }
  if (vertex < 0 || vertex >= num_positions()) {
    throw std::out_of_range("vertex out of range");
  }
  if (Contains(position)) throw std::invalid_argument("position reassigned");
  if (UsesVertex(vertex)) throw std::invalid_argument("vertex used twice");
  images_[position - 1] = vertex;
}

bool PartialMap::UsesVertex(int vertex) const {
  return std::find(images_.begin(), images_.end(), vertex) != images_.end();
}

std::vector<int> PartialMap::Support() const {
  std::vector<int> out;
  for (int p = 1; p <= num_positions(); ++p) {
    if (Contains(p)) out.push_back(p);
  }
  return out;
}

int PartialMap::SupportSize() const {
  return static_cast<int>(std::count_if(
      images_.begin(), images_.end(), [](int v) { return v != kUnassigned; }));
}

Permutation PartialMap::AsPermutation() const {
  if (!IsTotal()) throw std::logic_error("partial map is not total");
  return Permutation(images_);
}

std::optional<PartialMap> DirectProduct(const PartialMap& a,
                                        const PartialMap& b) {
  if (a.num_positions() != b.num_positions()) {
    throw std::invalid_argument("partial maps of different sizes");
  }
  const int n = a.num_positions();
  std::vector<uint8_t> used(n, 0);
  for (int p = 1; p <= n; ++p) {
    if (a.Contains(p)) {
      if (b.Contains(p)) throw std::invalid_argument("overlapping supports");
      used[a.Image(p)] = 1;
    }
  }
  PartialMap out = a;
  for (int p = 1; p <= n; ++p) {
    if (!b.Contains(p)) continue;
    if (used[b.Image(p)]) return std::nullopt;
    out.Assign(p, b.Image(p));
  }
  return out;
}

namespace {

// One generator of the filter together with its edge {low, high} in the
// forest on the n points: low is the first moved point, high = g(low).
struct ForestEdge {
  int low;
  int high;
  Permutation perm;
};

// Path of edge indices from `from` to `to` in the forest, or empty if the
// two points lie in different trees.
std::vector<int> ForestPath(const std::vector<ForestEdge>& edges, int n,
                            int from, int to) {
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    incident[edges[e].low].push_back(e);
    incident[edges[e].high].push_back(e);
  }
  std::vector<int> via(n, -2);
  via[from] = -1;
  std::deque<int> queue = {from};
  while (!queue.empty() && via[to] == -2) {
    const int u = queue.front();
    queue.pop_front();
    for (int e : incident[u]) {
      const int v = edges[e].low == u ? edges[e].high : edges[e].low;
      if (via[v] != -2) continue;
      via[v] = e;
      queue.push_back(v);
    }
  }
  std::vector<int> path;
  if (via[to] == -2) return path;
  for (int v = to; v != from;) {
    const int e = via[v];
    path.push_back(e);
    v = edges[e].low == v ? edges[e].high : edges[e].low;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

GenSet ReduceGenerators(std::span<const Permutation> perms, int n) {
  for (const Permutation& p : perms) {
    if (p.size() != n) {
      throw std::invalid_argument("permutation size does not match n");
    }
  }
  std::vector<ForestEdge> forest;
  std::vector<Permutation> pending(perms.rbegin(), perms.rend());
  while (!pending.empty()) {
    Permutation g = std::move(pending.back());
    pending.pop_back();
    // Each pass either inserts a forest edge or replaces g by an element
    // fixing strictly more leading points, so this loop terminates.
    while (!g.IsIdentity()) {
      const int low = g.FirstMovedPoint();
      const int high = g[low];
      const std::vector<int> path = ForestPath(forest, n, low, high);
      if (path.empty()) {
        forest.push_back({low, high, g});
        break;
      }
      // Walk the cycle formed by the path plus the new edge, starting from
      // its smallest point m. Both cycle edges at m have m as first moved
      // point, so the product of the edge labels around the cycle fixes
      // every point <= m.
      struct Step {
        int edge;  // index into forest, or -1 for g itself
        int from;
        int to;
      };
      std::vector<Step> cycle;
      int at = low;
      for (int e : path) {
        const int next = forest[e].low == at ? forest[e].high : forest[e].low;
        cycle.push_back({e, at, next});
        at = next;
      }
      cycle.push_back({-1, high, low});
      size_t start = 0;
      for (size_t i = 1; i < cycle.size(); ++i) {
        if (cycle[i].from < cycle[start].from) start = i;
      }
      std::rotate(cycle.begin(), cycle.begin() + start, cycle.end());

      auto label = [&](const Step& s) -> const Permutation& {
        return s.edge < 0 ? g : forest[s.edge].perm;
      };
      Permutation product = Permutation::Identity(n);
      for (const Step& s : cycle) {
        const Permutation& h = label(s);
        product = Compose(h[s.from] == s.to ? h : Inverse(h), product);
      }
      // Drop the element labelling the first cycle edge; it is recovered as
      // a product of `product` and the remaining labels.
      const int dropped = cycle.front().edge;
      if (dropped >= 0) {
        pending.push_back(std::move(g));
        forest.erase(forest.begin() + dropped);
      }
      g = std::move(product);
    }
  }
  GenSet out;
  out.n = n;
  for (ForestEdge& e : forest) out.generators.push_back(std::move(e.perm));
  return out;
}

std::optional<std::vector<Permutation>> Closure(const GenSet& s,
                                                int64_t cap) {
  std::set<Permutation> seen;
  std::vector<Permutation> order;
  const Permutation id = Permutation::Identity(s.n);
  seen.insert(id);
  order.push_back(id);
  if (static_cast<int64_t>(order.size()) > cap) return std::nullopt;
  for (size_t i = 0; i < order.size(); ++i) {
    for (const Permutation& gen : s.generators) {
      Permutation next = Compose(gen, order[i]);
      if (seen.insert(next).second) {
        order.push_back(std::move(next));
        if (static_cast<int64_t>(order.size()) > cap) return std::nullopt;
      }
    }
  }
  return order;
}

double Log2Factorial(int n) {
  return std::lgamma(static_cast<double>(n) + 1.0) / std::log(2.0);
}

}  // namespace triblock
