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

#include <string>

#include "common.hpp"
#include "doctest.h"
#include "json.hpp"
#include "kassign/instance.hpp"
#include "kassign/report.hpp"

namespace kassign {
namespace {

using testing::fin;
using testing::ninf;
using testing::sample4x4;

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

TEST_CASE("algorithm names parse and resolve") {
  CHECK(parse_algo("auto") == AlgoChoice::kAuto);
  CHECK(parse_algo("brute") == AlgoChoice::kBrute);
  CHECK(parse_algo("ssp") == AlgoChoice::kSsp);
  CHECK(parse_algo("gk") == AlgoChoice::kGk);
  CHECK(parse_algo("gk-fill") == AlgoChoice::kGkFill);
  CHECK_THROWS_AS(parse_algo("simplex"), std::invalid_argument);

  CHECK(resolve_algo(AlgoChoice::kAuto, 6) == SolverKind::kBruteForce);
  CHECK(resolve_algo(AlgoChoice::kAuto, 10) == SolverKind::kParametricFill);
  CHECK(resolve_algo(AlgoChoice::kSsp, 10) == SolverKind::kSuccessivePaths);
}

TEST_CASE("text report of the sample instance") {
  InstanceSpec spec = parse_instance(serialize_instance(
      spec_from_matrix(sample4x4())));
  for (const char* algo : {"brute", "ssp", "gk", "gk-fill"}) {
    SolveOptions opt;
    opt.algo = parse_algo(algo);
    RunReport rep = solve_instance(spec, opt, "sample");
    std::string text = render_text(rep, true);
    CHECK(contains(text, "objective: max"));
    CHECK(contains(text, "size: 4x4 (n=4)"));
    CHECK(contains(text, "omegas: 10 18 23 23"));
    CHECK(contains(text,
                   "polynomial: x^4 (+) 10x^3 (+) 18x^2 (+) 23x (+) 23"));
    CHECK(contains(text, "singular values: (10,1) (8,1) (5,1) (0,1)"));
    CHECK(contains(
        text, "classes: essential essential essential essential essential"));
  }
}

TEST_CASE("json report carries exact strings") {
  SolveOptions opt;
  opt.algo = AlgoChoice::kBrute;
  RunReport rep =
      solve_instance(spec_from_matrix(sample4x4()), opt, "sample");
  nlohmann::json j = nlohmann::json::parse(render_json(rep, true));
  CHECK(j["schema"] == 1);
  CHECK(j["instance"]["objective"] == "max");
  CHECK(j["instance"]["n"] == 4);
  CHECK(j["algorithm"] == "brute");
  CHECK(j["omegas"] == nlohmann::json::array({"10", "18", "23", "23"}));
  CHECK(j["polynomial"]["coeffs_desc"] ==
        nlohmann::json::array({"0", "10", "18", "23", "23"}));
  CHECK(j["singular_values"][0][0] == "10");
  CHECK(j["singular_values"][0][1] == 1);
  CHECK(j["matchings"]["1"] ==
        nlohmann::json::array({nlohmann::json::array({2, 1})}));
  CHECK(j["classes"].size() == 5);
}

TEST_CASE("min instances render in their own domain") {
  InstanceSpec spec = parse_instance("min 2 2\n1 2\n3 4\n");
  SolveOptions opt;
  opt.algo = AlgoChoice::kBrute;
  RunReport rep = solve_instance(spec, opt, "mini");
  std::string text = render_text(rep, false);
  CHECK(contains(text, "objective: min"));
  CHECK(contains(text, "omegas: 1 5"));

  nlohmann::json j = nlohmann::json::parse(render_json(rep, false));
  CHECK(j["omegas"] == nlohmann::json::array({"1", "5"}));
  CHECK(j["instance"]["objective"] == "min");
  CHECK(j.count("matchings") == 0);
}

TEST_CASE("rectangular minimization pads without changing the answers") {
  InstanceSpec spec = parse_instance("min 2 3\n8 1 6\n3 5 7\n");
  SolveOptions opt;
  opt.algo = AlgoChoice::kGkFill;
  RunReport rep = solve_instance(spec, opt, "rect");
  // Best single cell is 1; best pair is 1 + 3.
  CHECK(rep.transform.n == 3);
  CHECK(rep.seq.omegas[1] == fin(-1));
  CHECK(rep.seq.omegas[2] == fin(-4));
  CHECK(rep.seq.omegas[3].is_neg_inf());
  std::string text = render_text(rep, false);
  CHECK(contains(text, "omegas: 1 4 inf"));
}

TEST_CASE("solver outputs cross-check as a bundle") {
  WeightMatrix w = sample4x4();
  std::vector<AssignmentSequence> seqs;
  seqs.push_back(solve_sequence_brute(w));
  seqs.push_back(solve_sequence_ssp(w));
  seqs.push_back(complete_sequence(w, solve_parametric(w)));
  VerifyOutcome out = verify_sequences(w, seqs);
  CHECK(out.ok);
  CHECK(out.notes.empty());
}

TEST_CASE("verification flags corrupted sequences") {
  WeightMatrix w = sample4x4();
  std::vector<AssignmentSequence> seqs;
  seqs.push_back(solve_sequence_brute(w));
  seqs.push_back(solve_sequence_ssp(w));

  SUBCASE("omega mismatch between solvers") {
    seqs[1].omegas[2] = fin(19);
    CHECK(!verify_sequences(w, seqs).ok);
  }
  SUBCASE("broken concavity") {
    for (auto& s : seqs) {
      s.omegas[1] = fin(1);  // increments 1 then 17
    }
    CHECK(!verify_sequences(w, seqs).ok);
  }
  SUBCASE("wrong leading value") {
    for (auto& s : seqs) s.omegas[0] = fin(1);
    CHECK(!verify_sequences(w, seqs).ok);
  }
  SUBCASE("witness of the wrong cardinality") {
    seqs[0].matchings[2] = seqs[0].matchings[1];
    CHECK(!verify_sequences(w, seqs).ok);
  }
  SUBCASE("witness weight disagrees with omega") {
    seqs[0].matchings[1] = Matching({{0, 1}});  // weight 8, omega says 10
    CHECK(!verify_sequences(w, seqs).ok);
  }
}

}  // namespace
}  // namespace kassign
