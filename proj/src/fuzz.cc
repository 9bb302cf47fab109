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

#include "triblock/fuzz.h"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "triblock/oracle.h"
#include "triblock/report.h"

namespace triblock {

uint64_t TrialSeed(uint64_t master_seed, int64_t trial) {
  // splitmix64 finalizer over (master, trial).
  uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph RandomTriangleTiledGraph(int n, double edge_prob, std::mt19937_64& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<uint8_t> adj(static_cast<size_t>(n) * n, 0);
  auto set = [&](Vertex u, Vertex v) {
    adj[static_cast<size_t>(u) * n + v] = adj[static_cast<size_t>(v) * n + u] = 1;
  };
  for (int t = 0; t + 2 < n; t += 3) {
    set(order[t], order[t + 1]);
    set(order[t], order[t + 2]);
    set(order[t + 1], order[t + 2]);
  }
  std::bernoulli_distribution extra(edge_prob);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      // Always draw so the stream does not depend on the planted tiling.
      const bool coin = extra(rng);
      if (adj[static_cast<size_t>(u) * n + v] || coin) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph RandomRelabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> images(g.num_vertices());
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return ApplyPermutation(g, Permutation(std::move(images)));
}

namespace {

// Toggles one random pair, or trades one edge for one non-edge so the edge
// count is kept.
Graph Perturb(const Graph& g, std::mt19937_64& rng) {
  const int n = g.num_vertices();
  std::vector<std::pair<Vertex, Vertex>> edges = g.Edges();
  std::vector<std::pair<Vertex, Vertex>> non_edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.Adjacent(u, v)) non_edges.emplace_back(u, v);
    }
  }
  auto pick = [&](size_t size) {
    return std::uniform_int_distribution<size_t>(0, size - 1)(rng);
  };
  const bool trade = std::bernoulli_distribution(0.5)(rng);
  if (trade && !edges.empty() && !non_edges.empty()) {
    edges.erase(edges.begin() + pick(edges.size()));
    edges.push_back(non_edges[pick(non_edges.size())]);
  } else if (!non_edges.empty() &&
             (edges.empty() || std::bernoulli_distribution(0.5)(rng))) {
    edges.push_back(non_edges[pick(non_edges.size())]);
  } else if (!edges.empty()) {
    edges.erase(edges.begin() + pick(edges.size()));
  }
  return Graph(n, edges);
}

Verdict Run(const Graph& g, const Graph& h, PipelineOptions options,
            Mode mode) {
  options.mode = mode;
  return Decide(g, h, options);
}

struct TrialOutcome {
  TrialRecord record;
  bool oracle_isomorphic = false;
  std::optional<Verdict> secondary;
};

TrialOutcome RunTrial(const FuzzConfig& config, int64_t trial) {
  TrialOutcome out;
  TrialRecord& r = out.record;
  r.trial = trial;
  r.trial_seed = TrialSeed(config.seed, trial);
  const size_t num_n = config.ns.size();
  const int n = config.ns[trial % num_n];
  r.edge_prob =
      config.edge_probs[(trial / num_n) % config.edge_probs.size()];
  std::mt19937_64 rng(r.trial_seed);
  r.g = RandomTriangleTiledGraph(n, r.edge_prob, rng);
  r.planted_isomorphic = std::bernoulli_distribution(0.5)(rng);
  r.h = RandomRelabel(r.planted_isomorphic ? r.g : Perturb(r.g, rng), rng);

  r.mode = config.modes == ModeSelection::kCompressed ? Mode::kCompressed
                                                       : Mode::kExact;
  r.verdict = Run(r.g, r.h, config.options, r.mode);
  if (config.modes == ModeSelection::kBoth) {
    out.secondary = Run(r.g, r.h, config.options, Mode::kCompressed);
  }
  out.oracle_isomorphic =
      BruteForceIsomorphism(r.g, r.h, /*enumerate_all=*/false)
          .witness.has_value();
  return out;
}

bool Sound(const Verdict& v, const Graph& g, const Graph& h) {
  return v.witness.has_value() && IsIsomorphismWitness(h, g, *v.witness);
}

}  // namespace

FuzzReport RunFuzz(const FuzzConfig& config) {
  if (config.ns.empty() || config.edge_probs.empty()) {
    throw std::invalid_argument("fuzz needs at least one n and edge prob");
  }
  for (int n : config.ns) {
    if (n < 1 || n > kOracleRecommendedMaxN) {
      throw std::invalid_argument("fuzz n must be in [1, " +
                                  std::to_string(kOracleRecommendedMaxN) +
                                  "] for oracle comparison");
    }
  }
  for (double p : config.edge_probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("edge probability must be in [0, 1]");
    }
  }
  const int64_t trials = std::max<int64_t>(0, config.trials);
  std::vector<TrialOutcome> outcomes(trials);
  int jobs = config.jobs > 0 ? config.jobs
                             : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp<int>(jobs, 1, static_cast<int>(std::max<int64_t>(1, trials)));
  std::atomic<int64_t> next{0};
  auto worker = [&]() {
    for (int64_t t = next++; t < trials; t = next++) {
      outcomes[t] = RunTrial(config, t);
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  FuzzReport report;
  report.config = config;
  report.trials = trials;
  for (TrialOutcome& o : outcomes) {
    TrialRecord& r = o.record;
    const Verdict& v = r.verdict;
    const bool witness = v.kind == Verdict::Kind::kIsomorphicWitness;
    if (witness) {
      if (Sound(v, r.g, r.h)) {
        ++report.sound_witnesses;
      } else {
        ++report.unsound_witnesses;
      }
    }
    const bool feasible = v.kind != Verdict::Kind::kInfeasible;
    if (r.planted_isomorphic && feasible) {
      ++report.planted_isomorphic_feasible;
      if (witness) ++report.primary_found_on_planted;
    }
    if (o.secondary) {
      const Verdict& s = *o.secondary;
      if (s.kind == Verdict::Kind::kIsomorphicWitness) {
        ++report.compressed_witnesses;
        if (!Sound(s, r.g, r.h)) ++report.compressed_unsound_witnesses;
        if (r.planted_isomorphic && feasible) {
          ++report.compressed_found_on_planted;
        }
      }
      if (s.kind != v.kind) {
        TrialRecord d = r;
        d.other = s;
        report.mode_disagreements.push_back(std::move(d));
      }
    }

    if (v.kind == Verdict::Kind::kInfeasible) {
      ++report.infeasible_count;
    } else if (v.conclusive) {
      ++report.precheck_rejections;
      if (o.oracle_isomorphic) ++report.precheck_oracle_disagreements;
    } else if (witness == o.oracle_isomorphic &&
               (!witness || Sound(v, r.g, r.h))) {
      ++report.agreements;
    } else {
      report.counterexamples.push_back(std::move(r));
    }
  }
  return report;
}

bool ReplayMatches(const TrialRecord& record, const PipelineOptions& options) {
  PipelineOptions opts = options;
  opts.timeout_ms = 0;
  const auto check = [&](const Verdict& expected) {
    const Verdict again = Run(record.g, record.h, opts, expected.diagnostics.mode);
    return VerdictJson(again).dump() == VerdictJson(expected).dump();
  };
  if (!check(record.verdict)) return false;
  return !record.other || check(*record.other);
}

}  // namespace triblock
