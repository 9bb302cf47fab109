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

// Randomized differential campaigns: pipeline verdicts against the oracle,
// and Exact mode against Compressed mode.

#ifndef TRIBLOCK_FUZZ_H_
#define TRIBLOCK_FUZZ_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "triblock/graph.h"
#include "triblock/pipeline.h"

namespace triblock {

// Per-trial seed derived from the master seed; independent of scheduling.
uint64_t TrialSeed(uint64_t master_seed, int64_t trial);

// Plants floor(n/3) disjoint triangles on a random vertex order, then adds
// every other pair independently with probability edge_prob.
Graph RandomTriangleTiledGraph(int n, double edge_prob, std::mt19937_64& rng);

// Uniformly random vertex relabeling.
Graph RandomRelabel(const Graph& g, std::mt19937_64& rng);

enum class ModeSelection {
  kExact,
  kCompressed,
  kBoth,
};

struct FuzzConfig {
  std::vector<int> ns = {6};
  std::vector<double> edge_probs = {0.3};
  int64_t trials = 100;
  uint64_t seed = 1;
  ModeSelection modes = ModeSelection::kExact;
  PipelineOptions options;
  // 0 picks std::thread::hardware_concurrency().
  int jobs = 0;
};

// Everything needed to rerun one trial's decision.
struct TrialRecord {
  int64_t trial = 0;
  uint64_t trial_seed = 0;
  double edge_prob = 0;
  bool planted_isomorphic = false;
  Graph g;
  Graph h;
  Mode mode = Mode::kExact;
  Verdict verdict;
  // Second mode's verdict for mode-disagreement records.
  std::optional<Verdict> other;
};

struct FuzzReport {
  FuzzConfig config;
  int64_t trials = 0;
  // Categories below partition the trials (primary mode's verdicts).
  int64_t agreements = 0;
  std::vector<TrialRecord> counterexamples;
  int64_t infeasible_count = 0;
  int64_t precheck_rejections = 0;

  int64_t sound_witnesses = 0;
  int64_t unsound_witnesses = 0;
  int64_t precheck_oracle_disagreements = 0;

  // Planted-isomorphic pairs whose base graph admits an arrangement.
  int64_t planted_isomorphic_feasible = 0;
  int64_t primary_found_on_planted = 0;

  // Filled when both modes run.
  int64_t compressed_witnesses = 0;
  int64_t compressed_found_on_planted = 0;
  int64_t compressed_unsound_witnesses = 0;
  std::vector<TrialRecord> mode_disagreements;
};

// Throws std::invalid_argument for n outside [1, kOracleRecommendedMaxN].
FuzzReport RunFuzz(const FuzzConfig& config);

// Recomputes the record's verdict; true iff it matches byte for byte in its
// JSON form.
bool ReplayMatches(const TrialRecord& record, const PipelineOptions& options);

}  // namespace triblock

#endif  // TRIBLOCK_FUZZ_H_
