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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. The optional first argument is the path
// of the command-line tool, used for the repeated-run determinism check.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_graphs.h"
#include "triblock/candidates.h"
#include "triblock/fuzz.h"
#include "triblock/graph.h"
#include "triblock/oracle.h"
#include "triblock/permgroup.h"
#include "triblock/pipeline.h"
#include "triblock/rearrange.h"
#include "triblock/report.h"

namespace triblock {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

int failures = 0;

void Report(int criterion, const std::string& title, Outcome& o) {
  if (!o.pass) ++failures;
  std::cout << "criterion " << criterion << " (" << title
            << "): " << (o.pass ? "PASS" : "FAIL") << " -" << o.detail.str()
            << std::endl;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

FuzzConfig SoundnessConfig() {
  FuzzConfig c;
  c.ns = {6, 9, 12};
  c.edge_probs = {0.0, 0.2, 0.5, 0.8};
  c.trials = 1200;
  c.seed = 20260101;
  c.modes = ModeSelection::kBoth;
  return c;
}

// Planted-isomorphic corpus for the completeness and differential
// measurements.
FuzzConfig CompletenessConfig() {
  FuzzConfig c;
  c.ns = {6, 9};
  c.edge_probs = {0.0, 0.2, 0.5, 0.8};
  c.trials = 1200;
  c.seed = 20260102;
  c.modes = ModeSelection::kBoth;
  return c;
}

void Criterion1(const FuzzReport& r, double seconds) {
  Outcome o;
  o.detail << " " << r.trials << " trials, " << r.sound_witnesses
           << " exact witnesses, " << r.compressed_witnesses
           << " compressed witnesses, " << r.unsound_witnesses + r.compressed_unsound_witnesses
           << " unsound, " << seconds << " s";
  o.Require(r.trials >= 1000, "at least 1000 trials");
  o.Require(r.unsound_witnesses == 0, "exact witnesses verify");
  o.Require(r.compressed_unsound_witnesses == 0, "compressed witnesses verify");
  o.Require(seconds < 60.0, "runtime under 60 s");
  Report(1, "soundness", o);
}

void Criterion2(const FuzzReport& r) {
  Outcome o;
  o.detail << " " << r.precheck_rejections << " pre-check rejections on n <= 9, "
           << r.precheck_oracle_disagreements << " disagree with the oracle";
  o.Require(r.precheck_rejections > 0, "corpus contains rejections");
  o.Require(r.precheck_oracle_disagreements == 0, "oracle agreement");
  Report(2, "oracle agreement on rejections", o);
}

// Serializes, parses back and replays every archived record.
int64_t ReplayFailures(const std::vector<TrialRecord>& records,
                       const PipelineOptions& options) {
  int64_t bad = 0;
  for (const TrialRecord& record : records) {
    const std::string text = TrialRecordJson(record).dump();
    const TrialRecord back = TrialRecordFromJson(Json::parse(text));
    if (TrialRecordJson(back).dump() != text ||
        !ReplayMatches(back, options)) {
      ++bad;
    }
  }
  return bad;
}

void Criterion3(const FuzzReport& r) {
  Outcome o;
  const double rate =
      r.planted_isomorphic_feasible == 0
          ? 0.0
          : static_cast<double>(r.primary_found_on_planted) /
                static_cast<double>(r.planted_isomorphic_feasible);
  const int64_t bad = ReplayFailures(r.counterexamples, r.config.options);
  o.detail << " exact found " << r.primary_found_on_planted << "/"
           << r.planted_isomorphic_feasible << " planted pairs (rate " << rate
           << "), " << r.counterexamples.size() << " archived misses, " << bad
           << " replay failures";
  o.Require(r.planted_isomorphic_feasible >= 500, "at least 500 planted pairs");
  o.Require(static_cast<int64_t>(r.counterexamples.size()) >=
                r.planted_isomorphic_feasible - r.primary_found_on_planted,
            "every miss archived");
  o.Require(bad == 0, "archived records replay");
  Report(3, "exact-mode completeness", o);
}

void Criterion4() {
  Outcome o;
  std::mt19937_64 rng(4);
  const std::vector<double> probs = {0.05, 0.1, 0.2, 0.3};
  int64_t sets = 0;
  int64_t violations = 0;
  int max_n = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 * (1 + static_cast<int>(rng() % 16));  // 3..48
    const Graph g = RandomTriangleTiledGraph(n, probs[trial % probs.size()], rng);
    const Arrangement a = std::get<Arrangement>(Rearrange(g, 0));
    const int64_t triangles =
        static_cast<int64_t>(testing::TrianglesNaive(g).size());
    for (const CandidateSet& beta : EnumerateAllBetas(g, a)) {
      ++sets;
      if (beta.size() != 6 * triangles ||
          beta.size() >= static_cast<int64_t>(n) * n * n) {
        ++violations;
      }
    }
    max_n = std::max(max_n, n);
  }
  o.detail << " 200 graphs up to n=" << max_n << ", " << sets
           << " candidate sets, " << violations << " violations";
  o.Require(violations == 0, "|beta_k| = 6 * triangles < n^3");
  Report(4, "candidate-set bound", o);
}

void Criterion5() {
  Outcome o;
  std::mt19937_64 rng(5);
  int64_t groups = 0;
  int64_t closure_checked = 0;
  int64_t violations = 0;
  auto check = [&](const std::vector<Permutation>& perms, int n) {
    ++groups;
    const GenSet s = ReduceGenerators(perms, n);
    const double size = static_cast<double>(s.generators.size());
    if (size > n - 1 || size > Log2Factorial(n) + 1e-9) ++violations;
    const std::set<Permutation> expected = testing::NaiveGroup(perms, n);
    if (expected.size() <= 5040) {
      ++closure_checked;
      const auto closure = Closure(s, 5040);
      if (!closure ||
          std::set<Permutation>(closure->begin(), closure->end()) != expected) {
        ++violations;
      }
    }
  };
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);  // 2..7
    const int count = 1 + static_cast<int>(rng() % 10);
    std::vector<Permutation> perms;
    for (int c = 0; c < count; ++c) {
      std::vector<int> images(n);
      std::iota(images.begin(), images.end(), 0);
      if (trial % 3 == 0) {
        std::shuffle(images.begin(), images.end(), rng);
      } else {
        std::swap(images[rng() % n], images[rng() % n]);
      }
      perms.emplace_back(images);
    }
    check(perms, n);
  }
  // Automorphism groups of tiled graphs: every automorphism for n <= 6,
  // the pipeline's generators above that.
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 * (1 + static_cast<int>(rng() % 3));
    const Graph g = RandomTriangleTiledGraph(n, 0.3, rng);
    std::vector<Permutation> autos;
    if (n <= 6) {
      for (const Permutation& p : testing::AllPermutations(n)) {
        if (ApplyPermutation(g, p) == g) autos.push_back(p);
      }
    } else {
      autos = std::get<AutResult>(AutomorphismGenerators(g)).gens.generators;
    }
    if (autos.empty()) autos.push_back(Permutation::Identity(n));
    check(autos, n);
  }
  o.detail << " " << groups << " groups, " << closure_checked
           << " closure checks, " << violations << " violations";
  o.Require(violations == 0, "size <= min(n-1, log2 n!) and closure equality");
  Report(5, "generator reduction bound", o);
}

int64_t ExactOrder(const Graph& g) {
  const AutResult aut = std::get<AutResult>(AutomorphismGenerators(g));
  const auto closure = Closure(aut.gens, 5040);
  return aut.complete && closure ? static_cast<int64_t>(closure->size()) : -1;
}

void Criterion6() {
  Outcome o;
  const int64_t k3 = ExactOrder(testing::K3());
  const int64_t k4 = *BruteForceAutomorphisms(testing::K4()).count;
  const int64_t prism_oracle = *BruteForceAutomorphisms(testing::Prism()).count;
  const int64_t octa_oracle =
      *BruteForceAutomorphisms(testing::Octahedron()).count;
  const int64_t prism = ExactOrder(testing::Prism());
  const int64_t octa = ExactOrder(testing::Octahedron());
  o.detail << " K3 " << k3 << ", K4 oracle " << k4 << ", prism oracle "
           << prism_oracle << " / closure " << prism << ", octahedron oracle "
           << octa_oracle << " / closure " << octa;
  o.Require(k3 == 6, "K3 -> 6");
  o.Require(k4 == 24, "K4 -> 24");
  o.Require(prism_oracle == 12 && prism == 12, "prism -> 12");
  o.Require(octa_oracle == 48 && octa == 48, "octahedron -> 48");
  Report(6, "fixed-point group orders", o);
}

void Criterion7() {
  Outcome o;
  struct Case {
    const char* name;
    Graph g;
    std::vector<std::string> reasons;
  };
  const std::vector<Case> cases = {
      {"C5", testing::Cycle(5), {"not_divisible_by_3", "triangle_free"}},
      {"C6", testing::Cycle(6), {"no_triangle_block", "triangle_free"}},
      {"K33", testing::K33(), {"no_triangle_block", "triangle_free"}},
      {"Petersen", testing::Petersen(), {"not_divisible_by_3", "triangle_free"}},
  };
  for (const Case& c : cases) {
    const Verdict v = Decide(c.g, c.g);
    const bool ok =
        v.kind == Verdict::Kind::kInfeasible && v.reasons == c.reasons;
    o.Require(ok, std::string(c.name) + " reason codes");
  }

  // Every labeled graph on 6 vertices, restricted to connected ones.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) pairs.emplace_back(u, v);
  }
  int64_t connected = 0;
  int64_t feasible = 0;
  int64_t implication_violations = 0;
  int64_t converse_gaps = 0;
  for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (size_t e = 0; e < pairs.size(); ++e) {
      if (mask & (1u << e)) edges.push_back(pairs[e]);
    }
    const Graph g(6, edges);
    if (!IsConnected(g)) continue;
    ++connected;
    const bool partition = TrianglePartitionExists(g);
    bool any_seed = false;
    for (Vertex seed = 0; seed < 6; ++seed) {
      const bool ok = std::holds_alternative<Arrangement>(Rearrange(g, seed));
      any_seed |= ok;
      if (ok && !partition) ++implication_violations;
    }
    feasible += any_seed;
    if (partition && !any_seed) ++converse_gaps;
  }
  o.detail << " C5, C6, K3,3, Petersen rejected; " << connected
           << " connected 6-vertex graphs, " << feasible << " feasible, "
           << implication_violations << " implication violations, "
           << converse_gaps << " partitions missed";
  o.Require(connected == 26704, "26704 connected labeled graphs");
  o.Require(implication_violations == 0, "rearrange success => partition");
  Report(7, "infeasibility detection", o);
}

std::string RunCommand(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return out;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    out.append(buffer, got);
  }
  pclose(pipe);
  return out;
}

void Criterion8(const std::string& cli) {
  Outcome o;
  std::string first;
  std::string second;
  if (!cli.empty()) {
    const std::string command =
        "'" + cli + "' fuzz --n 9 --trials 100 --seed 7 --json";
    first = RunCommand(command);
    second = RunCommand(command);
    o.detail << " two CLI runs, " << first.size() << " bytes each";
  } else {
    FuzzConfig c;
    c.ns = {9};
    c.trials = 100;
    c.seed = 7;
    first = FuzzReportJson(RunFuzz(c)).dump(2);
    second = FuzzReportJson(RunFuzz(c)).dump(2);
    o.detail << " two in-process runs, " << first.size() << " bytes each";
  }
  o.Require(!first.empty(), "report produced");
  o.Require(first == second, "byte-identical reports");
  Report(8, "determinism", o);
}

void Criterion9(const FuzzReport& r) {
  Outcome o;
  const int64_t bad = ReplayFailures(r.mode_disagreements, r.config.options);
  const double fidelity =
      r.primary_found_on_planted == 0
          ? 0.0
          : static_cast<double>(r.compressed_found_on_planted) /
                static_cast<double>(r.primary_found_on_planted);
  int64_t expected_disagreements = 0;
  o.detail << " compressed found " << r.compressed_found_on_planted << "/"
           << r.primary_found_on_planted << " of exact's planted witnesses"
           << " (fidelity " << fidelity << "), " << r.mode_disagreements.size()
           << " verdict-kind disagreements archived, " << bad
           << " replay failures";
  for (const TrialRecord& d : r.mode_disagreements) {
    expected_disagreements += d.other.has_value() &&
                              d.other->kind != d.verdict.kind;
  }
  o.Require(expected_disagreements ==
                static_cast<int64_t>(r.mode_disagreements.size()),
            "archived records carry both verdicts");
  o.Require(bad == 0, "disagreements replay");
  Report(9, "exact vs compressed differential", o);
}

}  // namespace
}  // namespace triblock

int main(int argc, char** argv) {
  using namespace triblock;
  const std::string cli = argc > 1 ? argv[1] : "";

  const auto start = std::chrono::steady_clock::now();
  const FuzzReport soundness = RunFuzz(SoundnessConfig());
  const double soundness_seconds = Seconds(start);
  const FuzzReport corpus = RunFuzz(CompletenessConfig());

  Criterion1(soundness, soundness_seconds);
  Criterion2(corpus);
  Criterion3(corpus);
  Criterion4();
  Criterion5();
  Criterion6();
  Criterion7();
  Criterion8(cli);
  Criterion9(corpus);
  std::cout << (failures == 0 ? "all criteria passed" : "some criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
