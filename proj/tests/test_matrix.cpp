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
#include "kassign/matching.hpp"
#include "kassign/matrix.hpp"

namespace kassign {
namespace {

using testing::fin;
using testing::ninf;
using testing::sample4x4;

TEST_CASE("weight matrix construction and bounds") {
  WeightMatrix w(2);
  CHECK(w.size() == 2);
  CHECK(w.at(0, 0).is_neg_inf());
  w.at(1, 0) = fin(7);
  CHECK(w.at(1, 0) == fin(7));
  CHECK_THROWS_AS(w.at(2, 0), std::out_of_range);
  CHECK_THROWS_AS(w.at(0, -1), std::out_of_range);
  CHECK_THROWS_AS(WeightMatrix(0), std::invalid_argument);
  CHECK_THROWS_AS(
      WeightMatrix::from_rows({{fin(1), fin(2)}, {fin(3)}}),
      std::invalid_argument);
}

TEST_CASE("largest finite entry") {
  CHECK(sample4x4().max_finite() == Rational(10));
  CHECK(!WeightMatrix(3).max_finite().has_value());
  WeightMatrix w(1);
  w.at(0, 0) = fin(-9, 2);
  CHECK(w.max_finite() == Rational(-9, 2));
}

TEST_CASE("max-plus permanent of the sample instance") {
  CHECK(maxperm(sample4x4()) == fin(23));
  WeightMatrix one(1);
  one.at(0, 0) = fin(-3);
  CHECK(maxperm(one) == fin(-3));
  CHECK(maxperm(WeightMatrix(3)).is_neg_inf());
}

TEST_CASE("the permanent enumeration refuses oversized inputs") {
  CHECK_THROWS_AS(maxperm(WeightMatrix(10)), SizeBoundError);
  CHECK_NOTHROW(maxperm(WeightMatrix(10), 12));
}

TEST_CASE("matchings keep their pairs sorted by row") {
  Matching m({{2, 0}, {0, 1}});
  CHECK(m.size() == 2);
  CHECK(m.pairs() == std::vector<std::pair<int, int>>{{0, 1}, {2, 0}});
  CHECK(m.contains(2, 0));
  CHECK(!m.contains(2, 1));
  CHECK(m.col_of(0) == 1);
  CHECK(m.col_of(1) == -1);
  CHECK(m.str() == "(1,2) (3,1)");
  CHECK(Matching({{0, 1}, {2, 0}}) == m);
  CHECK(Matching().empty());
}

TEST_CASE("matching validity needs distinct rows and columns in range") {
  CHECK(Matching({{0, 0}, {1, 1}}).is_valid(2));
  CHECK(!Matching({{0, 0}, {0, 1}}).is_valid(2));  // row reused
  CHECK(!Matching({{0, 0}, {1, 0}}).is_valid(2));  // column reused
  CHECK(!Matching({{0, 2}}).is_valid(2));          // out of range
  CHECK(!Matching({{-1, 0}}).is_valid(2));
  CHECK(Matching().is_valid(1));
}

TEST_CASE("matching weight sums matched entries") {
  WeightMatrix w = sample4x4();
  CHECK(Matching({{0, 1}, {1, 0}}).weight(w) == fin(18));
  CHECK(Matching().weight(w) == fin(0));
  // An absent edge poisons the whole sum.
  CHECK(Matching({{0, 0}, {1, 1}}).weight(w).is_neg_inf());
}

TEST_CASE("symmetric difference toggles edges") {
  Matching m({{0, 1}});
  Matching next = m.symmetric_difference({{0, 1}, {0, 0}});
  CHECK(next == Matching({{0, 0}}));
  // An alternating path grows the matching by one.
  Matching grown = m.symmetric_difference({{1, 1}});
  CHECK(grown == Matching({{0, 1}, {1, 1}}));
  CHECK(m.symmetric_difference({}) == m);
}

}  // namespace
}  // namespace kassign
