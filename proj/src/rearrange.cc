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

#include <algorithm>
#include <stdexcept>

namespace triblock {

std::string ReasonCode(Infeasible::Reason reason) {
  switch (reason) {
    case Infeasible::Reason::kNotDivisibleBy3:
      return "not_divisible_by_3";
    case Infeasible::Reason::kNoTriangleBlock:
      return "no_triangle_block";
  }
  return "unknown";
}

namespace {

// Choice point for one block: candidate lists for b and c plus cursors.
struct Frame {
  Vertex anchor = -1;
  std::vector<Vertex> b_options;
  size_t b_index = 0;
  std::vector<Vertex> c_options;
  size_t c_index = 0;
  bool chosen = false;  // b and c currently labeled
  bool fresh = true;
};

}  // namespace

struct ArrangementEnumerator::State {
  const Graph* g = nullptr;
  Vertex seed = 0;
  TieBreak policy = TieBreak::kLowestFirst;
  std::vector<uint8_t> labeled;
  std::vector<Frame> stack;
  bool started = false;
  bool exhausted = false;
  bool produced = false;
  bool early_failure = false;
  Infeasible failure;
  int deepest_failure = 0;

  // Candidate order: ascending ids for kLowestFirst, descending otherwise.
  std::vector<Vertex> Ordered(std::vector<Vertex> v) const {
    if (policy == TieBreak::kHighestFirst) std::reverse(v.begin(), v.end());
    return v;
  }

  Vertex NextAnchor() const {
    const int n = g->num_vertices();
    if (policy == TieBreak::kLowestFirst) {
      for (Vertex v = 0; v < n; ++v) {
        if (!labeled[v]) return v;
      }
    } else {
      for (Vertex v = n - 1; v >= 0; --v) {
        if (!labeled[v]) return v;
      }
    }
    return -1;
  }

  void PushFrame(Vertex anchor) {
    Frame f;
    f.anchor = anchor;
    std::vector<Vertex> b;
    for (Vertex v : g->Neighbors(anchor)) {
      if (!labeled[v]) b.push_back(v);
    }
    f.b_options = Ordered(std::move(b));
    labeled[anchor] = 1;
    stack.push_back(std::move(f));
  }

  // c candidates: unlabeled common neighbors of anchor and b that come
  // after b in policy order.
  void FillC(Frame& f) {
    const Vertex b = f.b_options[f.b_index];
    std::vector<Vertex> c;
    for (Vertex v : Ordered(g->Neighbors(b))) {
      if (labeled[v] || v == f.anchor) continue;
      const bool after = policy == TieBreak::kLowestFirst ? v > b : v < b;
      if (after && g->Adjacent(v, f.anchor)) c.push_back(v);
    }
    f.c_options = std::move(c);
    f.c_index = 0;
  }

  // Moves f to its next (b, c) choice, labeling both. Returns false when
  // the frame has no alternatives left; f is then fully unlabeled except for
  // its anchor.
  bool NextChoice(Frame& f) {
    if (f.chosen) {
      labeled[f.c_options[f.c_index]] = 0;
      ++f.c_index;
      f.chosen = false;
    } else if (f.fresh) {
      f.fresh = false;
      if (f.b_options.empty()) return false;
      labeled[f.b_options[0]] = 1;
      FillC(f);
    } else {
      return false;
    }
    while (true) {
      if (f.c_index < f.c_options.size()) {
        labeled[f.c_options[f.c_index]] = 1;
        f.chosen = true;
        return true;
      }
      labeled[f.b_options[f.b_index]] = 0;
      ++f.b_index;
      if (f.b_index >= f.b_options.size()) return false;
      labeled[f.b_options[f.b_index]] = 1;
      FillC(f);
    }
  }

  // Advances to the next complete tiling. Returns false when exhausted.
  bool Advance() {
    const int blocks = g->num_vertices() / 3;
    if (!started) {
      started = true;
      PushFrame(seed);
    }
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (NextChoice(f)) {
        if (static_cast<int>(stack.size()) == blocks) return true;
        PushFrame(NextAnchor());
        continue;
      }
      deepest_failure =
          std::max(deepest_failure, static_cast<int>(stack.size()));
      labeled[f.anchor] = 0;
      stack.pop_back();
    }
    return false;
  }

  Arrangement Snapshot() const {
    Arrangement a;
    a.n = g->num_vertices();
    a.w.assign(a.n, -1);
    for (size_t idx = 0; idx < stack.size(); ++idx) {
      const Frame& f = stack[idx];
      Block block;
      block.k = static_cast<int>(idx) + 1;
      block.i = 3 * block.k - 2;
      block.j = 3 * block.k;
      block.vertices = {f.anchor, f.b_options[f.b_index],
                        f.c_options[f.c_index]};
      a.w[block.j - 1] = block.vertices[0];
      a.w[block.j - 2] = block.vertices[1];
      a.w[block.i - 1] = block.vertices[2];
      a.blocks.push_back(block);
    }
    return a;
  }
};

ArrangementEnumerator::ArrangementEnumerator(const Graph& g, Vertex seed,
                                             TieBreak policy)
    : state_(std::make_unique<State>()) {
  const int n = g.num_vertices();
  if (seed < 0 || seed >= n) {
    throw std::out_of_range("seed " + std::to_string(seed) +
                            " out of range for n=" + std::to_string(n));
  }
  state_->g = &g;
  state_->seed = seed;
  state_->policy = policy;
  state_->labeled.assign(n, 0);
  if (n % 3 != 0) {
    state_->early_failure = true;
    state_->failure.reason = Infeasible::Reason::kNotDivisibleBy3;
  }
  bool any_triangle = false;
  for (Vertex v = 0; v < n && !any_triangle; ++v) {
    any_triangle = VertexInTriangle(g, v);
  }
  state_->failure.triangle_free = !any_triangle;
  if (!state_->early_failure && !any_triangle) {
    state_->early_failure = true;
    state_->failure.reason = Infeasible::Reason::kNoTriangleBlock;
    state_->failure.at_block = 1;
  }
}

ArrangementEnumerator::~ArrangementEnumerator() = default;
ArrangementEnumerator::ArrangementEnumerator(ArrangementEnumerator&&) noexcept =
    default;
ArrangementEnumerator& ArrangementEnumerator::operator=(
    ArrangementEnumerator&&) noexcept = default;

std::optional<Arrangement> ArrangementEnumerator::Next() {
  State& s = *state_;
  if (s.early_failure || s.exhausted) return std::nullopt;
  if (!s.Advance()) {
    s.exhausted = true;
    if (!s.produced) {
      s.failure.reason = Infeasible::Reason::kNoTriangleBlock;
      s.failure.at_block = std::max(1, s.deepest_failure);
    }
    return std::nullopt;
  }
  s.produced = true;
  return s.Snapshot();
}

Infeasible ArrangementEnumerator::failure() const { return state_->failure; }

RearrangeResult Rearrange(const Graph& g, Vertex seed, TieBreak policy) {
  ArrangementEnumerator it(g, seed, policy);
  if (std::optional<Arrangement> a = it.Next()) return *std::move(a);
  return it.failure();
}

Graph BlockPattern(const Arrangement& a, const Graph& g, int k) {
  if (k < 1 || k > a.num_blocks()) {
    throw std::out_of_range("block index " + std::to_string(k) +
                            " out of range");
  }
  const auto& v = a.blocks[k - 1].vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int x = 0; x < 3; ++x) {
    for (int y = x + 1; y < 3; ++y) {
      if (g.Adjacent(v[x], v[y])) edges.emplace_back(x, y);
    }
  }
  return Graph(3, edges);
}

bool IsValidArrangement(const Arrangement& a, const Graph& g) {
  const int n = g.num_vertices();
  if (a.n != n || static_cast<int>(a.w.size()) != n || n % 3 != 0) {
    return false;
  }
  if (a.num_blocks() != n / 3) return false;
  std::vector<uint8_t> seen(n, 0);
  for (Vertex v : a.w) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int k = 1; k <= a.num_blocks(); ++k) {
    const Block& b = a.blocks[k - 1];
    if (b.k != k || b.i != 3 * k - 2 || b.j != b.i + 2) return false;
    if (a.AtPosition(b.j) != b.vertices[0] ||
        a.AtPosition(b.j - 1) != b.vertices[1] ||
        a.AtPosition(b.i) != b.vertices[2]) {
      return false;
    }
    if (!g.Adjacent(b.vertices[0], b.vertices[1]) ||
        !g.Adjacent(b.vertices[0], b.vertices[2]) ||
        !g.Adjacent(b.vertices[1], b.vertices[2])) {
      return false;
    }
  }
  return true;
}

}  // namespace triblock
