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

#include "triblock/pipeline.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace triblock {

std::string ModeName(Mode mode) {
  return mode == Mode::kExact ? "exact" : "compressed";
}

std::string KindName(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::kIsomorphicWitness:
      return "isomorphic_witness";
    case Verdict::Kind::kNoWitnessFound:
      return "no_witness_found";
    case Verdict::Kind::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

Deadline::Deadline(int64_t timeout_ms) {
  if (timeout_ms > 0) {
    end_ = std::chrono::steady_clock::now() +
           std::chrono::milliseconds(timeout_ms);
  }
}

bool Deadline::Expired() const {
  return end_.has_value() && std::chrono::steady_clock::now() >= *end_;
}

std::vector<int> State::CoveredPositions() const {
  std::vector<int> out(3 * covered_blocks);
  for (int p = 0; p < 3 * covered_blocks; ++p) out[p] = p + 1;
  return out;
}

bool IsConsistent(const PartialMap& m, const Graph& g, const Graph& h,
                  const Arrangement& arrangement) {
  const std::vector<int> support = m.Support();
  for (size_t a = 0; a < support.size(); ++a) {
    for (size_t b = a + 1; b < support.size(); ++b) {
      const int p = support[a];
      const int q = support[b];
      if (g.Adjacent(arrangement.AtPosition(p), arrangement.AtPosition(q)) !=
          h.Adjacent(m.Image(p), m.Image(q))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<PartialMap> ConsistencyFilter(std::span<const PartialMap> candidates,
                                          const Graph& g, const Graph& h,
                                          const Arrangement& arrangement) {
  std::vector<PartialMap> out;
  if (candidates.empty()) return out;
  const std::vector<int> support = candidates.front().Support();
  for (const PartialMap& m : candidates) {
    if (m.Support() != support) {
      throw std::invalid_argument("candidates have mixed supports");
    }
    if (IsConsistent(m, g, h, arrangement)) out.push_back(m);
  }
  return out;
}

namespace {

struct ProductOutcome {
  StepStatus status = StepStatus::kOk;
  std::vector<PartialMap> survivors;
  int64_t gamma = 0;
};

// Filtered direct products carriers x beta. Only pairs involving a new
// position are checked: carriers are already consistent on `covered`, and
// products are never materialized unless they survive.
ProductOutcome FilteredProducts(std::span<const PartialMap> carriers,
                                const CandidateSet& beta,
                                const std::vector<int>& covered,
                                const Block& block, const Graph& g,
                                const Graph& h, const Arrangement& arrangement,
                                int64_t cap, const Deadline& deadline) {
  ProductOutcome out;
  const int n = g.num_vertices();
  const std::array<int, 3> fresh = {block.j, block.j - 1, block.i};
  std::vector<uint8_t> used(n, 0);
  int64_t ticks = 0;
  for (const PartialMap& carrier : carriers) {
    std::fill(used.begin(), used.end(), 0);
    for (int q : covered) used[carrier.Image(q)] = 1;
    for (const PartialMap& pi : beta.maps) {
      if ((++ticks & 0xfff) == 0 && deadline.Expired()) {
        out.status = StepStatus::kTimeout;
        return out;
      }
      std::array<int, 3> img;
      bool collision = false;
      for (int s = 0; s < 3; ++s) {
        img[s] = pi.Image(fresh[s]);
        collision |= used[img[s]] != 0;
      }
      if (collision) continue;
      ++out.gamma;
      bool ok = true;
      for (int s = 0; s < 3 && ok; ++s) {
        const Vertex gp = arrangement.AtPosition(fresh[s]);
        for (int r = s + 1; r < 3 && ok; ++r) {
          ok = g.Adjacent(gp, arrangement.AtPosition(fresh[r])) ==
               h.Adjacent(img[s], img[r]);
        }
        for (size_t c = 0; c < covered.size() && ok; ++c) {
          const int q = covered[c];
          ok = g.Adjacent(gp, arrangement.AtPosition(q)) ==
               h.Adjacent(img[s], carrier.Image(q));
        }
      }
      if (!ok) continue;
      PartialMap combined = carrier;
      for (int s = 0; s < 3; ++s) combined.Assign(fresh[s], img[s]);
      out.survivors.push_back(std::move(combined));
      if (static_cast<int64_t>(out.survivors.size()) > cap) {
        out.status = StepStatus::kCapExceeded;
        return out;
      }
    }
  }
  if (out.survivors.empty()) out.status = StepStatus::kNoWitness;
  return out;
}

// Splits survivors into sigma0 = survivors[0] and the position permutations
// d with sigma = sigma0 o d. Survivors onto a different vertex set than
// sigma0 have no such d and are only counted.
void Factor(const std::vector<PartialMap>& survivors,
            const std::vector<int>& covered, int n, State* state,
            int64_t* unrepresented) {
  const PartialMap& sigma0 = survivors.front();
  std::vector<int> position_of(n, -1);
  for (int p : covered) position_of[sigma0.Image(p)] = p;
  std::vector<Permutation> diffs;
  *unrepresented = 0;
  for (size_t s = 1; s < survivors.size(); ++s) {
    const PartialMap& sigma = survivors[s];
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i;
    bool same_image = true;
    for (int p : covered) {
      const int q = position_of[sigma.Image(p)];
      if (q < 0) {
        same_image = false;
        break;
      }
      images[p - 1] = q - 1;
    }
    if (!same_image) {
      ++*unrepresented;
      continue;
    }
    diffs.emplace_back(std::move(images));
  }
  state->representative = sigma0;
  state->gens = ReduceGenerators(diffs, n);
}

std::vector<PartialMap> CompressedCarriers(const State& state,
                                           const std::vector<int>& covered) {
  std::set<PartialMap> carriers;
  const PartialMap& sigma0 = *state.representative;
  carriers.insert(sigma0);
  for (const Permutation& d : state.gens.generators) {
    PartialMap m(sigma0.num_positions());
    for (int p : covered) m.Assign(p, sigma0.Image(d[p - 1] + 1));
    carriers.insert(std::move(m));
  }
  return {carriers.begin(), carriers.end()};
}

StepResult Store(std::vector<PartialMap> survivors,
                 const std::vector<int>& covered, State next, int n) {
  StepResult out;
  out.alpha_size = static_cast<int64_t>(survivors.size());
  if (next.mode == Mode::kExact) {
    next.exact_maps = std::move(survivors);
  } else {
    Factor(survivors, covered, n, &next, &out.unrepresented);
  }
  out.state = std::move(next);
  return out;
}

}  // namespace

StepResult StartState(const CandidateSet& beta1, const Graph& g,
                      const Graph& h, const Arrangement& arrangement,
                      Mode mode, int64_t cap) {
  if (beta1.k != 1) throw std::invalid_argument("expected block 1 candidates");
  std::vector<PartialMap> survivors =
      ConsistencyFilter(beta1.maps, g, h, arrangement);
  StepResult out;
  if (survivors.empty()) {
    out.status = StepStatus::kNoWitness;
    return out;
  }
  if (static_cast<int64_t>(survivors.size()) > cap) {
    out.status = StepStatus::kCapExceeded;
    return out;
  }
  State next;
  next.mode = mode;
  next.covered_blocks = 1;
  const std::vector<int> covered = next.CoveredPositions();
  out = Store(std::move(survivors), covered, std::move(next),
              g.num_vertices());
  out.gamma_size = beta1.size();
  return out;
}

StepResult Extend(const State& state, const CandidateSet& beta_next,
                  const Graph& g, const Graph& h,
                  const Arrangement& arrangement, int64_t cap,
                  const Deadline& deadline) {
  if (beta_next.k != state.covered_blocks + 1 ||
      beta_next.k > arrangement.num_blocks()) {
    throw std::invalid_argument("candidate set is not for the next block");
  }
  const std::vector<int> covered = state.CoveredPositions();
  const Block& block = arrangement.blocks[beta_next.k - 1];

  std::vector<PartialMap> compressed;
  std::span<const PartialMap> carriers = state.exact_maps;
  if (state.mode == Mode::kCompressed) {
    compressed = CompressedCarriers(state, covered);
    carriers = compressed;
  }
  ProductOutcome products =
      FilteredProducts(carriers, beta_next, covered, block, g, h, arrangement,
                       cap, deadline);
  StepResult out;
  if (products.status != StepStatus::kOk) {
    out.status = products.status;
    out.gamma_size = products.gamma;
    out.alpha_size = static_cast<int64_t>(products.survivors.size());
    return out;
  }
  State next;
  next.mode = state.mode;
  next.t = state.t + 1;
  next.covered_blocks = state.covered_blocks + 1;
  out = Store(std::move(products.survivors), next.CoveredPositions(),
              std::move(next), g.num_vertices());
  out.gamma_size = products.gamma;
  return out;
}

StepResult InitState(const Graph& g, const Graph& h,
                     const Arrangement& arrangement, const CandidateSet& beta1,
                     const CandidateSet& beta2, Mode mode, int64_t cap,
                     const Deadline& deadline) {
  StepResult start = StartState(beta1, g, h, arrangement, mode, cap);
  if (start.status != StepStatus::kOk) return start;
  return Extend(start.state, beta2, g, h, arrangement, cap, deadline);
}

Permutation Totalize(const PartialMap& phi, const Arrangement& arrangement) {
  if (!phi.IsTotal() || phi.num_positions() != arrangement.n) {
    throw std::invalid_argument("cannot totalize a partial map");
  }
  std::vector<int> images(arrangement.n);
  for (int p = 1; p <= arrangement.n; ++p) {
    images[phi.Image(p)] = arrangement.AtPosition(p);
  }
  return Permutation(std::move(images));
}

RunResult RunArrangement(const Graph& g, const Graph& h,
                         const Arrangement& arrangement,
                         const PipelineOptions& options,
                         const Deadline& deadline) {
  RunResult run;
  run.diagnostics.mode = options.mode;
  const std::vector<CandidateSet> betas = EnumerateAllBetas(h, arrangement);
  for (const CandidateSet& beta : betas) {
    run.diagnostics.beta_sizes.push_back(beta.size());
  }
  StepResult step =
      StartState(betas.front(), g, h, arrangement, options.mode, options.cap);
  for (size_t k = 1; step.status == StepStatus::kOk && k < betas.size(); ++k) {
    step = Extend(step.state, betas[k], g, h, arrangement, options.cap,
                  deadline);
    run.diagnostics.gamma_sizes.push_back(step.gamma_size);
    run.diagnostics.alpha_sizes.push_back(step.alpha_size);
    if (options.mode == Mode::kCompressed && step.status == StepStatus::kOk) {
      run.diagnostics.gen_sizes.push_back(
          static_cast<int64_t>(step.state.gens.generators.size()));
      run.diagnostics.unrepresented.push_back(step.unrepresented);
    }
  }
  run.status = step.status;
  run.final_state = std::move(step.state);
  if (run.status == StepStatus::kCapExceeded ||
      run.status == StepStatus::kTimeout) {
    run.diagnostics.budget_limited = true;
  }
  return run;
}

namespace {

std::optional<Permutation> WitnessFrom(const RunResult& run, const Graph& g,
                                       const Graph& h,
                                       const Arrangement& arrangement) {
  if (run.status != StepStatus::kOk) return std::nullopt;
  const State& s = run.final_state;
  const PartialMap* phi = nullptr;
  if (s.mode == Mode::kExact) {
    if (!s.exact_maps.empty()) phi = &s.exact_maps.front();
  } else if (s.representative) {
    phi = &*s.representative;
  }
  if (phi == nullptr) return std::nullopt;
  Permutation p = Totalize(*phi, arrangement);
  if (!IsIsomorphismWitness(h, g, p)) return std::nullopt;
  return p;
}

}  // namespace

Verdict Decide(const Graph& g, const Graph& h, const PipelineOptions& options) {
  Verdict verdict;
  verdict.diagnostics.mode = options.mode;
  auto reject = [&](const std::string& reason) {
    verdict.kind = Verdict::Kind::kNoWitnessFound;
    verdict.conclusive = true;
    verdict.reasons.push_back(reason);
    return verdict;
  };
  if (g.num_vertices() != h.num_vertices()) return reject("size_mismatch");
  if (g.num_edges() != h.num_edges()) return reject("edge_count_mismatch");
  if (SortedDegrees(g) != SortedDegrees(h)) {
    return reject("degree_multiset_mismatch");
  }
  const int n = g.num_vertices();
  if (n == 0) {
    verdict.kind = Verdict::Kind::kIsomorphicWitness;
    verdict.witness = Permutation::Identity(0);
    return verdict;
  }

  const Deadline deadline(options.timeout_ms);
  std::vector<ArrangementEnumerator> enumerators;
  std::vector<uint8_t> exhausted(n, 0);
  enumerators.reserve(n);
  for (Vertex seed = 0; seed < n; ++seed) {
    enumerators.emplace_back(g, seed, options.policy);
  }

  int attempts = 0;
  int live = n;
  bool limited = false;
  bool stop = false;
  Diagnostics last;
  last.mode = options.mode;
  // Round-robin over seeds: the r-th arrangement of every seed before the
  // (r+1)-th of any.
  while (!stop && live > 0 && attempts < options.retry_budget) {
    for (Vertex seed = 0; seed < n && !stop; ++seed) {
      if (exhausted[seed]) continue;
      if (attempts >= options.retry_budget) break;
      std::optional<Arrangement> arrangement = enumerators[seed].Next();
      if (!arrangement) {
        exhausted[seed] = 1;
        --live;
        // Every seed lies on some triangle of any tiling, so feasibility
        // does not depend on the seed.
        if (attempts == 0 && seed == 0) {
          verdict.kind = Verdict::Kind::kInfeasible;
          verdict.infeasible = enumerators[0].failure();
          verdict.reasons.push_back(ReasonCode(verdict.infeasible->reason));
          if (verdict.infeasible->triangle_free) {
            verdict.reasons.push_back("triangle_free");
          }
          return verdict;
        }
        continue;
      }
      ++attempts;
      RunResult run = RunArrangement(g, h, *arrangement, options, deadline);
      last = run.diagnostics;
      if (std::optional<Permutation> p = WitnessFrom(run, g, h, *arrangement)) {
        verdict.kind = Verdict::Kind::kIsomorphicWitness;
        verdict.witness = std::move(p);
        verdict.diagnostics = std::move(last);
        verdict.diagnostics.budget_used = attempts;
        verdict.diagnostics.budget_limited = limited;
        return verdict;
      }
      switch (run.status) {
        case StepStatus::kTimeout:
          limited = true;
          stop = true;
          verdict.reasons.push_back("timeout");
          break;
        case StepStatus::kCapExceeded:
          limited = true;
          // Exact-mode survivor counts do not depend on the arrangement
          // enough to make another attempt worthwhile.
          if (options.mode == Mode::kExact) stop = true;
          if (std::find(verdict.reasons.begin(), verdict.reasons.end(),
                        "cap_exceeded") == verdict.reasons.end()) {
            verdict.reasons.push_back("cap_exceeded");
          }
          break;
        case StepStatus::kNoWitness:
        case StepStatus::kOk:
          // A completed Exact run has examined every isomorphism that
          // respects some tiling of G, which is every isomorphism.
          if (options.mode == Mode::kExact) stop = true;
          break;
      }
    }
  }
  verdict.kind = Verdict::Kind::kNoWitnessFound;
  if (!limited && live > 0 && !stop) {
    limited = true;
    verdict.reasons.push_back("retry_budget_exhausted");
  }
  if (limited) {
    verdict.reasons.push_back("budget_limited");
  } else {
    verdict.reasons.push_back("search_exhausted");
  }
  verdict.diagnostics = std::move(last);
  verdict.diagnostics.budget_used = attempts;
  verdict.diagnostics.budget_limited = limited;
  return verdict;
}

AutResult AutomorphismGenerators(const Graph& g, const Arrangement& arrangement,
                                 const PipelineOptions& options) {
  AutResult out;
  out.gens.n = g.num_vertices();
  const Deadline deadline(options.timeout_ms);
  RunResult run = RunArrangement(g, g, arrangement, options, deadline);
  out.diagnostics = run.diagnostics;
  out.diagnostics.budget_used = 1;
  if (run.status != StepStatus::kOk) {
    out.complete = false;
    return out;
  }
  const int n = g.num_vertices();
  std::vector<Permutation> automorphisms;
  const State& s = run.final_state;
  if (s.mode == Mode::kExact) {
    for (const PartialMap& phi : s.exact_maps) {
      automorphisms.push_back(Totalize(phi, arrangement));
    }
  } else {
    const Permutation p0 = Totalize(*s.representative, arrangement);
    automorphisms.push_back(p0);
    for (const Permutation& d : s.gens.generators) {
      std::vector<int> images(n);
      for (int i = 0; i < n; ++i) images[arrangement.w[i]] = arrangement.w[d[i]];
      automorphisms.emplace_back(std::move(images));
    }
  }
  for (const Permutation& p : automorphisms) {
    if (!IsIsomorphismWitness(g, g, p)) {
      throw std::logic_error("pipeline produced a non-automorphism");
    }
  }
  out.gens = ReduceGenerators(automorphisms, n);
  out.gens.representative = automorphisms.front();
  return out;
}

std::variant<AutResult, Infeasible> AutomorphismGenerators(
    const Graph& g, const PipelineOptions& options) {
  if (g.num_vertices() == 0) {
    AutResult out;
    return out;
  }
  RearrangeResult r = Rearrange(g, 0, options.policy);
  if (auto* bad = std::get_if<Infeasible>(&r)) return *bad;
  return AutomorphismGenerators(g, std::get<Arrangement>(r), options);
}

}  // namespace triblock
