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

// triblock: command-line front end.
//
// Exit codes: 0 witness found / success, 10 no witness, 20 method
// inapplicable (infeasible arrangement), 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "triblock/candidates.h"
#include "triblock/fuzz.h"
#include "triblock/graph.h"
#include "triblock/oracle.h"
#include "triblock/pipeline.h"
#include "triblock/rearrange.h"
#include "triblock/report.h"

namespace triblock {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoWitness = 10;
constexpr int kExitInfeasible = 20;
constexpr int kExitInputError = 2;

struct CommonFlags {
  bool json = false;
  std::string mode = "exact";
  int64_t cap = 1'000'000;
  int retry_budget = 32;
  int64_t timeout_ms = 0;

  PipelineOptions Options(Mode m) const {
    PipelineOptions o;
    o.mode = m;
    o.cap = cap;
    o.retry_budget = retry_budget;
    o.timeout_ms = timeout_ms;
    return o;
  }
  Mode PrimaryMode() const {
    return mode == "compressed" ? Mode::kCompressed : Mode::kExact;
  }
};

void AddCommon(CLI::App* cmd, CommonFlags* f) {
  cmd->add_flag("--json", f->json, "Print JSON");
  cmd->add_option("--mode", f->mode, "exact | compressed | both")
      ->check(CLI::IsMember({"exact", "compressed", "both"}));
  cmd->add_option("--cap", f->cap, "Candidate-set size ceiling")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--retry-budget", f->retry_budget,
                  "Arrangements tried before giving up")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--timeout-ms", f->timeout_ms, "0 disables");
}

void PrintVerdictText(const std::string& label, const Verdict& v) {
  std::cout << label << KindName(v.kind);
  if (!v.reasons.empty()) {
    std::cout << " (";
    for (size_t i = 0; i < v.reasons.size(); ++i) {
      std::cout << (i ? ", " : "") << v.reasons[i];
    }
    std::cout << ")";
  }
  std::cout << "\n";
  if (v.witness) {
    std::cout << "witness: " << PermutationJson(*v.witness).dump() << "\n";
  }
}

int VerdictExit(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::kIsomorphicWitness:
      return kExitOk;
    case Verdict::Kind::kNoWitnessFound:
      return kExitNoWitness;
    case Verdict::Kind::kInfeasible:
      return kExitInfeasible;
  }
  return kExitInputError;
}

int CmdCheck(const std::string& g_path, const std::string& h_path,
             const CommonFlags& f) {
  const Graph g = ReadEdgeListFile(g_path);
  const Graph h = ReadEdgeListFile(h_path);
  const Verdict v = Decide(g, h, f.Options(f.PrimaryMode()));
  if (f.mode == "both") {
    const Verdict c = Decide(g, h, f.Options(Mode::kCompressed));
    if (f.json) {
      std::cout << Json{{"schema", kSchemaVersion},
                        {"exact", VerdictJson(v)},
                        {"compressed", VerdictJson(c)}}
                       .dump(2)
                << "\n";
    } else {
      PrintVerdictText("exact: ", v);
      PrintVerdictText("compressed: ", c);
    }
  } else if (f.json) {
    std::cout << VerdictJson(v).dump(2) << "\n";
  } else {
    PrintVerdictText("", v);
  }
  return VerdictExit(v);
}

int CmdAut(const std::string& g_path, bool order, const CommonFlags& f) {
  const Graph g = ReadEdgeListFile(g_path);
  const auto result = AutomorphismGenerators(g, f.Options(f.PrimaryMode()));
  if (const auto* bad = std::get_if<Infeasible>(&result)) {
    if (f.json) {
      std::cout << Json{{"schema", kSchemaVersion},
                        {"infeasible", InfeasibleJson(*bad)}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "infeasible (" << ReasonCode(bad->reason) << ")\n";
    }
    return kExitInfeasible;
  }
  const AutResult& aut = std::get<AutResult>(result);
  Json out = GenSetJson(aut.gens);
  out["complete"] = aut.complete;
  if (order) {
    const auto elements = Closure(aut.gens, f.cap);
    if (elements) {
      out["order"] = static_cast<int64_t>(elements->size());
    } else {
      out["order"] = nullptr;
      out["order_cap_exceeded"] = true;
    }
  }
  out["diagnostics"] = DiagnosticsJson(aut.diagnostics);
  if (f.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "generators: " << aut.gens.generators.size() << "\n";
    for (const Permutation& p : aut.gens.generators) {
      std::cout << "  " << p.ToCycleString() << "\n";
    }
    if (order) std::cout << "order: " << out["order"].dump() << "\n";
  }
  return aut.complete ? kExitOk : kExitNoWitness;
}

int CmdRearrange(const std::string& g_path, int seed, const CommonFlags& f) {
  const Graph g = ReadEdgeListFile(g_path);
  const RearrangeResult r = Rearrange(g, seed);
  if (const auto* bad = std::get_if<Infeasible>(&r)) {
    std::cout << Json{{"schema", kSchemaVersion},
                      {"infeasible", InfeasibleJson(*bad)}}
                     .dump(f.json ? 2 : -1)
              << "\n";
    return kExitInfeasible;
  }
  std::cout << ArrangementJson(std::get<Arrangement>(r)).dump(f.json ? 2 : -1)
            << "\n";
  return kExitOk;
}

int CmdBeta(const std::string& g_path, const std::string& h_path, int k,
            bool list, const CommonFlags& f) {
  const Graph g = ReadEdgeListFile(g_path);
  const Graph h = ReadEdgeListFile(h_path);
  if (g.num_vertices() != h.num_vertices()) {
    std::cerr << "graphs have different vertex counts\n";
    return kExitInputError;
  }
  const RearrangeResult r = Rearrange(g, 0);
  if (const auto* bad = std::get_if<Infeasible>(&r)) {
    std::cout << Json{{"schema", kSchemaVersion},
                      {"infeasible", InfeasibleJson(*bad)}}
                     .dump(f.json ? 2 : -1)
              << "\n";
    return kExitInfeasible;
  }
  const Arrangement& a = std::get<Arrangement>(r);
  if (k < 1 || k > a.num_blocks()) {
    std::cerr << "--k must be in [1, " << a.num_blocks() << "]\n";
    return kExitInputError;
  }
  const CandidateSet beta =
      EnumerateBeta(BuildSearchTree(h), a.blocks[k - 1], h.num_vertices());
  std::cout << CandidateSetJson(beta, list).dump(f.json ? 2 : -1) << "\n";
  return kExitOk;
}

int CmdOracle(const std::string& g_path, const std::string& h_path,
              bool count, const CommonFlags& f) {
  const Graph g = ReadEdgeListFile(g_path);
  const Graph h = h_path.empty() ? g : ReadEdgeListFile(h_path);
  if (g.num_vertices() > kOracleRecommendedMaxN) {
    std::cerr << "warning: oracle is exhaustive; n=" << g.num_vertices()
              << " may be slow\n";
  }
  const OracleResult r =
      BruteForceIsomorphism(g, h, count || h_path.empty());
  std::cout << OracleJson(r).dump(f.json ? 2 : -1) << "\n";
  return r.witness ? kExitOk : kExitNoWitness;
}

int CmdFuzz(FuzzConfig config, const CommonFlags& f) {
  config.modes = f.mode == "both"         ? ModeSelection::kBoth
                 : f.mode == "compressed" ? ModeSelection::kCompressed
                                          : ModeSelection::kExact;
  config.options = f.Options(Mode::kExact);
  const FuzzReport report = RunFuzz(config);
  if (f.json) {
    std::cout << FuzzReportJson(report).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "trials: " << report.trials << "\n"
            << "agreements: " << report.agreements << "\n"
            << "counterexamples: " << report.counterexamples.size() << "\n"
            << "infeasible: " << report.infeasible_count << "\n"
            << "precheck rejections: " << report.precheck_rejections << "\n"
            << "sound witnesses: " << report.sound_witnesses << "\n"
            << "unsound witnesses: " << report.unsound_witnesses << "\n"
            << "completeness: " << report.primary_found_on_planted << "/"
            << report.planted_isomorphic_feasible << "\n";
  if (config.modes == ModeSelection::kBoth) {
    std::cout << "compressed found: " << report.compressed_found_on_planted
              << "/" << report.planted_isomorphic_feasible << "\n"
              << "mode disagreements: " << report.mode_disagreements.size()
              << "\n";
  }
  return kExitOk;
}

// Accepts a single trial record or a fuzz report; replays every record.
int CmdReplay(const std::string& path, const CommonFlags& f) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  const Json doc = Json::parse(in);
  std::vector<TrialRecord> records;
  if (doc.contains("verdict")) {
    records.push_back(TrialRecordFromJson(doc));
  } else {
    for (const char* key : {"no_witness_on_isomorphic", "mode_disagreements"}) {
      if (!doc.contains(key)) continue;
      for (const Json& r : doc.at(key)) records.push_back(TrialRecordFromJson(r));
    }
  }
  int mismatches = 0;
  for (const TrialRecord& r : records) {
    const bool ok = ReplayMatches(r, f.Options(r.mode));
    if (!ok) ++mismatches;
    if (!f.json) {
      std::cout << "trial " << r.trial << ": " << (ok ? "replayed" : "MISMATCH")
                << "\n";
    }
  }
  if (f.json) {
    std::cout << Json{{"schema", kSchemaVersion},
                      {"records", static_cast<int64_t>(records.size())},
                      {"mismatches", mismatches}}
                     .dump(2)
              << "\n";
  }
  return mismatches == 0 ? kExitOk : 1;
}

}  // namespace
}  // namespace triblock

int main(int argc, char** argv) {
  using namespace triblock;
  CLI::App app{"Triangle-block graph isomorphism pipeline"};
  app.require_subcommand(1);

  CommonFlags common;
  std::string g_path;
  std::string h_path;

  auto* check = app.add_subcommand("check", "Decide isomorphism of G and H");
  check->add_option("G", g_path, "Edge list of G")->required();
  check->add_option("H", h_path, "Edge list of H")->required();
  AddCommon(check, &common);

  bool order = false;
  auto* aut = app.add_subcommand("aut", "Automorphism generating set of G");
  aut->add_option("G", g_path, "Edge list of G")->required();
  aut->add_flag("--order", order, "Also report the closure order");
  AddCommon(aut, &common);

  int seed_vertex = 0;
  auto* rearrange = app.add_subcommand("rearrange", "Triangle arrangement of G");
  rearrange->add_option("G", g_path, "Edge list of G")->required();
  rearrange->add_option("--seed-vertex", seed_vertex, "First anchor vertex");
  AddCommon(rearrange, &common);

  int k = 1;
  bool list = false;
  auto* beta = app.add_subcommand("beta", "Candidate set of block k");
  beta->add_option("G", g_path, "Edge list of G")->required();
  beta->add_option("H", h_path, "Edge list of H")->required();
  beta->add_option("--k", k, "Block index (1-based)");
  beta->add_flag("--list", list, "List every candidate map");
  AddCommon(beta, &common);

  bool count = false;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive isomorphism search");
  oracle->add_option("G", g_path, "Edge list of G")->required();
  oracle->add_option("H", h_path, "Edge list of H (default: G itself)");
  oracle->add_flag("--count", count, "Count all isomorphisms");
  AddCommon(oracle, &common);

  FuzzConfig fuzz_config;
  auto* fuzz = app.add_subcommand("fuzz", "Randomized differential campaign");
  fuzz->add_option("--n", fuzz_config.ns, "Vertex counts (comma separated)")
      ->delimiter(',');
  fuzz->add_option("--trials", fuzz_config.trials, "Number of trials");
  fuzz->add_option("--seed", fuzz_config.seed, "Master seed")
      ->envname("TRIBLOCK_SEED");
  fuzz->add_option("--edge-prob", fuzz_config.edge_probs,
                   "Extra-edge probabilities (comma separated)")
      ->delimiter(',');
  fuzz->add_option("--jobs", fuzz_config.jobs, "Worker threads (0 = auto)");
  AddCommon(fuzz, &common);

  std::string record_path;
  auto* replay = app.add_subcommand("replay", "Re-run archived fuzz records");
  replay->add_option("record", record_path, "Record or fuzz report JSON")
      ->required();
  AddCommon(replay, &common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*check) return CmdCheck(g_path, h_path, common);
    if (*aut) return CmdAut(g_path, order, common);
    if (*rearrange) return CmdRearrange(g_path, seed_vertex, common);
    if (*beta) return CmdBeta(g_path, h_path, k, list, common);
    if (*oracle) return CmdOracle(g_path, h_path, count, common);
    if (*fuzz) return CmdFuzz(fuzz_config, common);
    if (*replay) return CmdReplay(record_path, common);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
