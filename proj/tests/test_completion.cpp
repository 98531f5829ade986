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
#include "kassign/completion.hpp"
#include "kassign/instance.hpp"
#include "kassign/oracle.hpp"
#include "kassign/ssp.hpp"

namespace kassign {
namespace {

using testing::fin;
using testing::ninf;

TEST_CASE("shared edges are set aside") {
  Matching m({{0, 0}, {1, 1}});
  PathDecomposition d = decompose(m, m, 2);
  CHECK(d.shared.size() == 2);
  CHECK(d.balanced.empty());
  CHECK(d.augmenting.empty());
  CHECK(d.reverse_augmenting.empty());
}

TEST_CASE("a grown matching decomposes into single-edge augmenting paths") {
  Matching empty;
  Matching full({{0, 0}, {1, 1}, {2, 2}});
  PathDecomposition d = decompose(empty, full, 3);
  CHECK(d.shared.empty());
  CHECK(d.balanced.empty());
  REQUIRE(d.augmenting.size() == 3);
  for (const AltPath& p : d.augmenting) {
    CHECK(p.small_edges.empty());
    CHECK(p.large_edges.size() == 1);
    CHECK(!p.is_cycle);
    CHECK(p.row_end == p.large_edges[0].first);
  }
}

TEST_CASE("equal-cardinality differences form balanced paths or cycles") {
  // Same row, different columns: one balanced path through the row.
  PathDecomposition byrow =
      decompose(Matching({{0, 0}}), Matching({{0, 1}}), 2);
  CHECK(byrow.augmenting.empty());
  REQUIRE(byrow.balanced.size() == 1);
  CHECK(!byrow.balanced[0].is_cycle);
  CHECK(byrow.balanced[0].small_edges.size() == 1);
  CHECK(byrow.balanced[0].large_edges.size() == 1);

  // Crossed pairs close a cycle of four edges.
  PathDecomposition crossed = decompose(Matching({{0, 0}, {1, 1}}),
                                        Matching({{0, 1}, {1, 0}}), 2);
  REQUIRE(crossed.balanced.size() == 1);
  CHECK(crossed.balanced[0].is_cycle);
  CHECK(crossed.balanced[0].small_edges.size() == 2);
  CHECK(crossed.balanced[0].large_edges.size() == 2);
  CHECK(crossed.balanced[0].all_edges().size() == 4);
}

TEST_CASE("longer alternating paths keep their edges ordered") {
  // small: (r0,c0); large: (r0,c1), (r1,c0).  The path walks
  // c1 - r0 - c0 - r1 and augments by one with row end r1.
  PathDecomposition d =
      decompose(Matching({{0, 0}}), Matching({{0, 1}, {1, 0}}), 2);
  CHECK(d.balanced.empty());
  REQUIRE(d.augmenting.size() == 1);
  const AltPath& p = d.augmenting[0];
  CHECK(p.small_edges.size() == 1);
  CHECK(p.large_edges.size() == 2);
  CHECK(p.row_end == 1);

  WeightMatrix w(2, fin(1));
  w.at(0, 1) = fin(4);
  CHECK(p.small_weight(w) == fin(1));
  CHECK(p.large_weight(w) == fin(5));
}

TEST_CASE("fill-in recovers the skipped cardinalities of a flat gap") {
  WeightMatrix w(2);
  w.at(0, 0) = fin(0);
  w.at(1, 1) = fin(0);
  Matching small;
  Matching large({{0, 0}, {1, 1}});
  std::vector<Matching> mid = fill_in(w, small, large);
  REQUIRE(mid.size() == 1);
  CHECK(mid[0].size() == 1);
  CHECK(mid[0].weight(w) == fin(0));
  // Gain ties break toward the lowest row end.
  CHECK(mid[0] == Matching({{0, 0}}));
}

TEST_CASE("adjacent optima one step apart need no fill-in") {
  WeightMatrix w(2, fin(0));
  CHECK(fill_in(w, Matching(), Matching({{0, 0}})).empty());
  CHECK_THROWS_AS(fill_in(w, Matching({{0, 0}}), Matching()),
                  std::invalid_argument);
}

TEST_CASE("unequal gains are rejected") {
  // The two diagonal entries differ, so the endpoints cannot be
  // consecutive optima of one flat segment.
  WeightMatrix w(2);
  w.at(0, 0) = fin(5);
  w.at(1, 1) = fin(1);
  CHECK_THROWS_AS(fill_in(w, Matching(), Matching({{0, 0}, {1, 1}})),
                  NotAdjacentError);
}

TEST_CASE("completion fills the all-zero gap") {
  WeightMatrix w(4, fin(0));
  GkResult gk = solve_parametric(w);
  REQUIRE(gk.reports.size() == 1);
  REQUIRE(gk.reports.count(4) == 1);
  AssignmentSequence seq = complete_sequence(w, gk);
  CHECK(seq.source == SolverKind::kParametricFill);
  REQUIRE(seq.omegas.size() == 5);
  for (int k = 0; k <= 4; ++k) {
    CHECK(seq.omegas[static_cast<size_t>(k)] == fin(0));
    REQUIRE(seq.matchings[static_cast<size_t>(k)].has_value());
    CHECK(seq.matchings[static_cast<size_t>(k)]->size() == k);
    CHECK(seq.matchings[static_cast<size_t>(k)]->weight(w) == fin(0));
  }
}

TEST_CASE("completion keeps the infeasible suffix") {
  WeightMatrix w(2);
  w.at(0, 0) = fin(2);
  w.at(0, 1) = fin(2);
  GkResult gk = solve_parametric(w);
  AssignmentSequence seq = complete_sequence(w, gk);
  CHECK(seq.omegas == std::vector<ExtReal>{fin(0), fin(2), ninf()});
  CHECK(seq.matchings[1].has_value());
  CHECK(!seq.matchings[2].has_value());
}

TEST_CASE("completed sequences match successive paths on random instances") {
  for (int t = 0; t < 120; ++t) {
    int n = 1 + t % 8;
    WeightMatrix w = generate_instance(
        n, 0, 3, Rational(static_cast<long long>(t) % 3, 10),
        61000 + static_cast<uint64_t>(t));
    GkResult gk = solve_parametric(w);
    AssignmentSequence filled = complete_sequence(w, gk);
    AssignmentSequence ssp = solve_sequence_ssp(w, false);
    CHECK(filled.omegas == ssp.omegas);
    for (int k = 0; k <= n; ++k) {
      const auto& m = filled.matchings[static_cast<size_t>(k)];
      if (filled.omegas[static_cast<size_t>(k)].is_neg_inf()) {
        CHECK(!m.has_value());
      } else {
        REQUIRE(m.has_value());
        CHECK(m->size() == k);
        CHECK(m->is_valid(n));
        CHECK(m->weight(w) == filled.omegas[static_cast<size_t>(k)]);
      }
    }
  }
}

}  // namespace
}  // namespace kassign
