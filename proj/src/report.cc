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

#include "triblock/report.h"

#include <stdexcept>

namespace triblock {

Json PermutationJson(const Permutation& p) { return Json(p.images()); }

Json GraphJson(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.Edges()) edges.push_back({u, v});
  return Json{{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Graph GraphFromJson(const Json& j) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Json& e : j.at("edges")) {
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return Graph(j.at("n").get<int>(), edges);
}

Json DiagnosticsJson(const Diagnostics& d) {
  Json out{
      {"mode", ModeName(d.mode)},
      {"beta_sizes", d.beta_sizes},
      {"gamma_sizes", d.gamma_sizes},
      {"alpha_sizes", d.alpha_sizes},
      {"gen_sizes", d.gen_sizes},
  };
  if (d.mode == Mode::kCompressed) out["unrepresented"] = d.unrepresented;
  out["budget_used"] = d.budget_used;
  out["budget_limited"] = d.budget_limited;
  return out;
}

Json InfeasibleJson(const Infeasible& f) {
  Json out{{"reason", ReasonCode(f.reason)}};
  if (f.reason == Infeasible::Reason::kNoTriangleBlock) {
    out["at_block"] = f.at_block;
  }
  out["triangle_free"] = f.triangle_free;
  return out;
}

Json VerdictJson(const Verdict& v) {
  Json out{{"schema", kSchemaVersion}, {"kind", KindName(v.kind)}};
  if (v.witness) out["witness"] = PermutationJson(*v.witness);
  out["reasons"] = v.reasons;
  out["conclusive"] = v.conclusive;
  if (v.infeasible) out["infeasible"] = InfeasibleJson(*v.infeasible);
  out["diagnostics"] = DiagnosticsJson(v.diagnostics);
  return out;
}

Json ArrangementJson(const Arrangement& a) {
  Json blocks = Json::array();
  for (const Block& b : a.blocks) {
    blocks.push_back({{"k", b.k},
                      {"i", b.i},
                      {"j", b.j},
                      {"vertices", {b.vertices[0], b.vertices[1], b.vertices[2]}}});
  }
  return Json{{"schema", kSchemaVersion},
              {"n", a.n},
              {"x", a.num_blocks()},
              {"w", a.w},
              {"blocks", std::move(blocks)}};
}

Json CandidateSetJson(const CandidateSet& beta, bool full_listing) {
  Json out{{"schema", kSchemaVersion}, {"k", beta.k}, {"count", beta.size()}};
  if (full_listing) {
    Json maps = Json::array();
    for (const PartialMap& m : beta.maps) {
      Json entry = Json::object();
      for (int p : m.Support()) entry[std::to_string(p)] = m.Image(p);
      maps.push_back(std::move(entry));
    }
    out["maps"] = std::move(maps);
  }
  return out;
}

Json GenSetJson(const GenSet& s) {
  Json gens = Json::array();
  for (const Permutation& p : s.generators) gens.push_back(PermutationJson(p));
  Json out{{"schema", kSchemaVersion}, {"n", s.n}, {"generators", gens}};
  if (s.representative) {
    out["representative"] = PermutationJson(*s.representative);
  }
  return out;
}

Json OracleJson(const OracleResult& r) {
  Json out{{"schema", kSchemaVersion}};
  out["isomorphic"] = r.witness.has_value();
  if (r.witness) out["witness"] = PermutationJson(*r.witness);
  if (r.count) out["count"] = *r.count;
  out["nodes_explored"] = r.nodes_explored;
  return out;
}

namespace {

Verdict VerdictFromJson(const Json& j) {
  Verdict v;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "isomorphic_witness") {
    v.kind = Verdict::Kind::kIsomorphicWitness;
  } else if (kind == "infeasible") {
    v.kind = Verdict::Kind::kInfeasible;
  } else {
    v.kind = Verdict::Kind::kNoWitnessFound;
  }
  if (j.contains("witness")) {
    v.witness = Permutation(j.at("witness").get<std::vector<int>>());
  }
  v.reasons = j.at("reasons").get<std::vector<std::string>>();
  v.conclusive = j.at("conclusive").get<bool>();
  const Json& d = j.at("diagnostics");
  v.diagnostics.mode = d.at("mode").get<std::string>() == "exact"
                           ? Mode::kExact
                           : Mode::kCompressed;
  v.diagnostics.beta_sizes = d.at("beta_sizes").get<std::vector<int64_t>>();
  v.diagnostics.gamma_sizes = d.at("gamma_sizes").get<std::vector<int64_t>>();
  v.diagnostics.alpha_sizes = d.at("alpha_sizes").get<std::vector<int64_t>>();
  v.diagnostics.gen_sizes = d.at("gen_sizes").get<std::vector<int64_t>>();
  if (d.contains("unrepresented")) {
    v.diagnostics.unrepresented =
        d.at("unrepresented").get<std::vector<int64_t>>();
  }
  v.diagnostics.budget_used = d.at("budget_used").get<int>();
  v.diagnostics.budget_limited = d.at("budget_limited").get<bool>();
  if (j.contains("infeasible")) {
    const Json& f = j.at("infeasible");
    Infeasible inf;
    inf.reason = f.at("reason").get<std::string>() == "not_divisible_by_3"
                     ? Infeasible::Reason::kNotDivisibleBy3
                     : Infeasible::Reason::kNoTriangleBlock;
    if (f.contains("at_block")) inf.at_block = f.at("at_block").get<int>();
    inf.triangle_free = f.at("triangle_free").get<bool>();
    v.infeasible = inf;
  }
  return v;
}

}  // namespace

Json TrialRecordJson(const TrialRecord& r) {
  Json out{{"schema", kSchemaVersion},
           {"trial", r.trial},
           {"trial_seed", r.trial_seed},
           {"edge_prob", r.edge_prob},
           {"planted_isomorphic", r.planted_isomorphic},
           {"mode", ModeName(r.mode)},
           {"g", GraphJson(r.g)},
           {"h", GraphJson(r.h)},
           {"verdict", VerdictJson(r.verdict)}};
  if (r.other) out["other_verdict"] = VerdictJson(*r.other);
  return out;
}

TrialRecord TrialRecordFromJson(const Json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion) {
    throw std::invalid_argument("unsupported record schema");
  }
  TrialRecord r;
  r.trial = j.at("trial").get<int64_t>();
  r.trial_seed = j.at("trial_seed").get<uint64_t>();
  r.edge_prob = j.at("edge_prob").get<double>();
  r.planted_isomorphic = j.at("planted_isomorphic").get<bool>();
  r.mode = j.at("mode").get<std::string>() == "exact" ? Mode::kExact
                                                       : Mode::kCompressed;
  r.g = GraphFromJson(j.at("g"));
  r.h = GraphFromJson(j.at("h"));
  r.verdict = VerdictFromJson(j.at("verdict"));
  if (j.contains("other_verdict")) {
    r.other = VerdictFromJson(j.at("other_verdict"));
  }
  return r;
}

namespace {

std::string ModesName(ModeSelection m) {
  switch (m) {
    case ModeSelection::kExact:
      return "exact";
    case ModeSelection::kCompressed:
      return "compressed";
    case ModeSelection::kBoth:
      return "both";
  }
  return "unknown";
}

double Rate(int64_t num, int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

Json FuzzReportJson(const FuzzReport& r) {
  const FuzzConfig& c = r.config;
  Json records = Json::array();
  for (const TrialRecord& t : r.counterexamples) {
    records.push_back(TrialRecordJson(t));
  }
  Json disagreements = Json::array();
  for (const TrialRecord& t : r.mode_disagreements) {
    disagreements.push_back(TrialRecordJson(t));
  }
  Json out{
      {"schema", kSchemaVersion},
      {"config",
       {{"n", c.ns},
        {"edge_probs", c.edge_probs},
        {"trials", c.trials},
        {"seed", c.seed},
        {"mode", ModesName(c.modes)},
        {"cap", c.options.cap},
        {"retry_budget", c.options.retry_budget}}},
      {"trials", r.trials},
      {"seeds", {{"master", c.seed}, {"first_trial", 0}, {"last_trial", r.trials - 1}}},
      {"agreements", r.agreements},
      {"counterexample_count", static_cast<int64_t>(r.counterexamples.size())},
      {"infeasible_count", r.infeasible_count},
      {"precheck_rejections", r.precheck_rejections},
      {"sound_witnesses", r.sound_witnesses},
      {"unsound_witnesses", r.unsound_witnesses},
      {"precheck_oracle_disagreements", r.precheck_oracle_disagreements},
      {"completeness",
       {{"planted_isomorphic_feasible", r.planted_isomorphic_feasible},
        {"found", r.primary_found_on_planted},
        {"rate", Rate(r.primary_found_on_planted,
                      r.planted_isomorphic_feasible)}}},
  };
  if (c.modes == ModeSelection::kBoth) {
    out["compressed"] = {
        {"witnesses", r.compressed_witnesses},
        {"unsound_witnesses", r.compressed_unsound_witnesses},
        {"found_on_planted", r.compressed_found_on_planted},
        {"fidelity", Rate(r.compressed_found_on_planted,
                          r.primary_found_on_planted)},
        {"disagreement_count",
         static_cast<int64_t>(r.mode_disagreements.size())}};
  }
  out["no_witness_on_isomorphic"] = std::move(records);
  if (c.modes == ModeSelection::kBoth) {
    out["mode_disagreements"] = std::move(disagreements);
  }
  return out;
}

}  // namespace triblock
