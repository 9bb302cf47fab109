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

// Block-by-block isomorphism search over a triangle arrangement of G.
//
// Blocks are absorbed in order 1, 2, ..., x. At step t the candidate maps
// covering blocks 1..t are combined with the next block's candidates
// (direct products), and only the products whose adjacency pattern on the
// covered positions matches G survive. Two modes are provided:
//
//  * kExact keeps every survivor. With any arrangement of G this finds a
//    witness whenever one exists, unless the cap is hit.
//  * kCompressed keeps one survivor sigma0 plus a reduced generating set of
//    position permutations d with sigma = sigma0 o d, and only carries
//    sigma0 and sigma0 o d (d a generator) into the next step.
//
// A witness P always satisfies ApplyPermutation(h, P) == g and is checked
// edge by edge before it is returned.

#ifndef TRIBLOCK_PIPELINE_H_
#define TRIBLOCK_PIPELINE_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "triblock/candidates.h"
#include "triblock/graph.h"
#include "triblock/permgroup.h"
#include "triblock/rearrange.h"

namespace triblock {

enum class Mode {
  kExact,
  kCompressed,
};

std::string ModeName(Mode mode);

struct PipelineOptions {
  Mode mode = Mode::kExact;
  // Ceiling on stored candidate maps per step.
  int64_t cap = 1'000'000;
  // Number of arrangements of G tried by Decide().
  int retry_budget = 32;
  // 0 disables the timeout.
  int64_t timeout_ms = 0;
  TieBreak policy = TieBreak::kLowestFirst;
};

struct Diagnostics {
  Mode mode = Mode::kExact;
  std::vector<int64_t> beta_sizes;
  // One entry per absorbed block after the first.
  std::vector<int64_t> gamma_sizes;
  std::vector<int64_t> alpha_sizes;
  // Compressed mode only.
  std::vector<int64_t> gen_sizes;
  // Compressed mode: survivors whose image set differs from sigma0's and
  // which therefore have no position-permutation form.
  std::vector<int64_t> unrepresented;
  int budget_used = 0;
  bool budget_limited = false;
};

// Keeps the candidates whose pairwise adjacency on their (shared) support
// matches G's arrangement. Throws std::invalid_argument on mixed supports.
std::vector<PartialMap> ConsistencyFilter(std::span<const PartialMap> candidates,
                                          const Graph& g, const Graph& h,
                                          const Arrangement& arrangement);

// True iff `m` is consistent over every pair of its supported positions.
bool IsConsistent(const PartialMap& m, const Graph& g, const Graph& h,
                  const Arrangement& arrangement);

struct State {
  int t = 0;                   // blocks absorbed beyond the first
  int covered_blocks = 0;      // blocks 1..covered_blocks are covered
  Mode mode = Mode::kExact;
  std::vector<PartialMap> exact_maps;
  // Compressed mode. Generators act on 0-based positions (position p is
  // point p - 1) and fix every uncovered position.
  std::optional<PartialMap> representative;
  GenSet gens;

  std::vector<int> CoveredPositions() const;
};

enum class StepStatus {
  kOk,
  kNoWitness,
  kCapExceeded,
  kTimeout,
};

struct StepResult {
  StepStatus status = StepStatus::kOk;
  State state;
  int64_t gamma_size = 0;
  int64_t alpha_size = 0;
  int64_t unrepresented = 0;
};

class Deadline {
 public:
  explicit Deadline(int64_t timeout_ms);
  bool Expired() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

// State covering block 1 alone (filtered beta_1).
StepResult StartState(const CandidateSet& beta1, const Graph& g,
                      const Graph& h, const Arrangement& arrangement,
                      Mode mode, int64_t cap);

// Absorbs blocks 1 and 2.
StepResult InitState(const Graph& g, const Graph& h,
                     const Arrangement& arrangement, const CandidateSet& beta1,
                     const CandidateSet& beta2, Mode mode, int64_t cap,
                     const Deadline& deadline = Deadline(0));

// Absorbs the next block.
StepResult Extend(const State& state, const CandidateSet& beta_next,
                  const Graph& g, const Graph& h,
                  const Arrangement& arrangement, int64_t cap,
                  const Deadline& deadline = Deadline(0));

// P = w o phi^{-1}: maps each H-vertex phi(p) to the G-vertex at p.
Permutation Totalize(const PartialMap& phi, const Arrangement& arrangement);

struct RunResult {
  StepStatus status = StepStatus::kOk;
  State final_state;
  Diagnostics diagnostics;
};

// Runs all blocks of one arrangement.
RunResult RunArrangement(const Graph& g, const Graph& h,
                         const Arrangement& arrangement,
                         const PipelineOptions& options,
                         const Deadline& deadline);

struct Verdict {
  enum class Kind {
    kIsomorphicWitness,
    kNoWitnessFound,
    kInfeasible,
  };
  Kind kind = Kind::kNoWitnessFound;
  std::optional<Permutation> witness;
  std::vector<std::string> reasons;
  // True when a pre-check (size, edge count, degrees) proved
  // non-isomorphism.
  bool conclusive = false;
  std::optional<Infeasible> infeasible;
  Diagnostics diagnostics;
};

std::string KindName(Verdict::Kind kind);

Verdict Decide(const Graph& g, const Graph& h,
               const PipelineOptions& options = {});

struct AutResult {
  GenSet gens;
  // False when the cap or timeout cut the run short.
  bool complete = true;
  Diagnostics diagnostics;
};

// Runs the pipeline with H := G against the given arrangement. Every element
// of <gens> is an automorphism of g.
AutResult AutomorphismGenerators(const Graph& g, const Arrangement& arrangement,
                                 const PipelineOptions& options = {});

// Same, using the arrangement from seed 0.
std::variant<AutResult, Infeasible> AutomorphismGenerators(
    const Graph& g, const PipelineOptions& options = {});

}  // namespace triblock

#endif  // TRIBLOCK_PIPELINE_H_
