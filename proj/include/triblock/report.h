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

// JSON forms of the library's results. Every top-level document carries
// "schema": 1.

#ifndef TRIBLOCK_REPORT_H_
#define TRIBLOCK_REPORT_H_

#include "json.hpp"

#include "triblock/candidates.h"
#include "triblock/fuzz.h"
#include "triblock/graph.h"
#include "triblock/oracle.h"
#include "triblock/permgroup.h"
#include "triblock/pipeline.h"
#include "triblock/rearrange.h"

namespace triblock {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json PermutationJson(const Permutation& p);
Json GraphJson(const Graph& g);
Graph GraphFromJson(const Json& j);

Json DiagnosticsJson(const Diagnostics& d);
Json VerdictJson(const Verdict& v);
Json ArrangementJson(const Arrangement& a);
Json InfeasibleJson(const Infeasible& f);
// Counts only unless `full_listing`.
Json CandidateSetJson(const CandidateSet& beta, bool full_listing);
Json GenSetJson(const GenSet& s);
Json OracleJson(const OracleResult& r);

Json TrialRecordJson(const TrialRecord& r);
TrialRecord TrialRecordFromJson(const Json& j);
Json FuzzReportJson(const FuzzReport& r);

}  // namespace triblock

#endif  // TRIBLOCK_REPORT_H_
