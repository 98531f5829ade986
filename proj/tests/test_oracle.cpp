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

#include "common.hpp"
#include "doctest.h"
#include "kassign/instance.hpp"
#include "kassign/oracle.hpp"

namespace kassign {
namespace {

using testing::fin;
using testing::ninf;
using testing::sample4x4;

TEST_CASE("exhaustive solve of the sample instance") {
  WeightMatrix w = sample4x4();
  const long long expected[] = {0, 10, 18, 23, 23};
  for (int k = 0; k <= 4; ++k) {
    BruteForceResult r = brute_force_k(w, k);
    CHECK(r.weight == fin(expected[k]));
    REQUIRE(r.matching.has_value());
    CHECK(r.matching->size() == k);
    CHECK(r.matching->is_valid(4));
    CHECK(r.matching->weight(w) == r.weight);
  }
  CHECK(brute_force_k(w, 1).matching->str() == "(2,1)");
}

TEST_CASE("cardinality zero is the empty assignment of weight zero") {
  BruteForceResult r = brute_force_k(WeightMatrix(3), 0);
  CHECK(r.weight == fin(0));
  REQUIRE(r.matching.has_value());
  CHECK(r.matching->empty());
}

TEST_CASE("infeasible cardinalities report -inf without a witness") {
  WeightMatrix w(2);
  w.at(0, 0) = fin(4);
  AssignmentSequence seq = solve_sequence_brute(w);
  CHECK(seq.omegas == std::vector<ExtReal>{fin(0), fin(4), ninf()});
  CHECK(seq.matchings[1].has_value());
  CHECK(!seq.matchings[2].has_value());
  CHECK(seq.last_finite() == 1);
  CHECK(seq.is_concave());
}

TEST_CASE("the full sequence agrees with the per-cardinality solves") {
  WeightMatrix w = sample4x4();
  AssignmentSequence seq = solve_sequence_brute(w);
  CHECK(seq.n == 4);
  REQUIRE(seq.omegas.size() == 5);
  for (int k = 0; k <= 4; ++k)
    CHECK(seq.omegas[static_cast<size_t>(k)] == brute_force_k(w, k).weight);
  CHECK(seq.fullchar() == brute_force_fullchar(w));
  CHECK(seq.fullchar().text() == "x^4 (+) 10x^3 (+) 18x^2 (+) 23x (+) 23");
}

TEST_CASE("the characteristic maxpolynomial evaluates as a bordered permanent") {
  // chi(x) agrees with the max-plus permanent of the matrix whose entries
  // are raised to at least x, for every finite x.  This ties the sequence
  // layout to an independent computation.
  SplitMix64 rng(515);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + static_cast<int>(rng.bounded(5));
    WeightMatrix w = generate_instance(
        n, -6, 6, Rational(static_cast<long long>(rng.bounded(4)), 5),
        9000 + static_cast<uint64_t>(t));
    MaxPolynomial chi = brute_force_fullchar(w);
    for (long long num : {-20, -7, -1, 0, 1, 3, 9, 25}) {
      for (long long den : {1, 2}) {
        ExtReal x = fin(num, den);
        WeightMatrix raised(n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) raised.at(i, j) = max(w.at(i, j), x);
        CHECK(chi.eval(x) == maxperm(raised));
      }
    }
    // At x = -inf nothing is raised and the constant term is the full
    // permanent.
    CHECK(chi.eval(ninf()) == maxperm(w));
  }
}

TEST_CASE("exhaustive routines refuse oversized instances") {
  CHECK_THROWS_AS(brute_force_k(WeightMatrix(10), 1), SizeBoundError);
  CHECK_THROWS_AS(solve_sequence_brute(WeightMatrix(10)), SizeBoundError);
  CHECK_NOTHROW(brute_force_k(WeightMatrix(10), 1, 12));
}

TEST_CASE("sequence views derive the polynomial structures") {
  WeightMatrix w = sample4x4();
  AssignmentSequence seq = solve_sequence_brute(w);
  std::vector<TermClass> cls = seq.classes_by_k();
  REQUIRE(cls.size() == 5);
  for (TermClass c : cls) CHECK(c == TermClass::kEssential);

  RootList roots = seq.fullchar().roots();
  REQUIRE(roots.size() == 4);
  CHECK(roots[0] == RootEntry{fin(0), 1});
  CHECK(roots[3] == RootEntry{fin(10), 1});
}

}  // namespace
}  // namespace kassign
