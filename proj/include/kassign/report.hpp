// Copyright 2026 The kassign Authors
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

#ifndef KASSIGN_REPORT_HPP_
#define KASSIGN_REPORT_HPP_

#include <string>
#include <vector>

#include "kassign/completion.hpp"
#include "kassign/instance.hpp"
#include "kassign/oracle.hpp"
#include "kassign/parametric.hpp"
#include "kassign/sequence.hpp"
#include "kassign/ssp.hpp"

namespace kassign {

enum class AlgoChoice { kAuto, kBrute, kSsp, kGk, kGkFill };

// "auto", "brute", "ssp", "gk", "gk-fill"; throws std::invalid_argument.
AlgoChoice parse_algo(const std::string& name);

// auto picks brute force within its size guard and the parametric sweep
// with fill-in beyond it.
SolverKind resolve_algo(AlgoChoice choice, int n);

struct RunReport {
  std::string instance_name;
  Transform transform;            // objective and shape of the source instance
  SolverKind algo = SolverKind::kBruteForce;
  AssignmentSequence seq;         // internal max-plus domain
  MaxPolynomial chi{std::vector<ExtReal>{ExtReal(0)}};
  std::vector<SingularValue> singular_values;  // non-increasing
  std::vector<TermClass> classes;              // by cardinality k = 0..n
  double solve_seconds = 0.0;
  double fill_seconds = 0.0;      // gk-fill only
  std::vector<GkTraceEvent> trace;
};

struct SolveOptions {
  AlgoChoice algo = AlgoChoice::kAuto;
  bool want_matchings = true;
  bool want_trace = false;
};

RunReport solve_instance(const InstanceSpec& spec, const SolveOptions& opt,
                         const std::string& name = "");

std::string render_text(const RunReport& rep, bool with_matchings);
std::string render_json(const RunReport& rep, bool with_matchings);
std::string render_trace(const RunReport& rep);

// Cross-checks several solved sequences of one matrix: identical omega
// values, concavity, witness validity and weight consistency.
struct VerifyOutcome {
  bool ok = true;
  std::vector<std::string> notes;
};
VerifyOutcome verify_sequences(const WeightMatrix& w,
                               const std::vector<AssignmentSequence>& seqs);

}  // namespace kassign

#endif  // KASSIGN_REPORT_HPP_
