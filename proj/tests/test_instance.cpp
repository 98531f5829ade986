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

#include <fstream>
#include <sstream>

#include "common.hpp"
#include "doctest.h"
#include "kassign/instance.hpp"

namespace kassign {
namespace {

using testing::fin;
using testing::ninf;

std::string fixture_text(const char* name) {
  std::ifstream in(std::string(KASSIGN_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

TEST_CASE("the sample fixture parses into the sample matrix") {
  InstanceSpec spec = parse_instance(fixture_text("sample4x4.txt"));
  CHECK(spec.objective == Objective::kMax);
  CHECK(spec.rows == 4);
  CHECK(spec.cols == 4);
  CHECK(spec.at(0, 0).infeasible);
  CHECK(spec.at(1, 0).value == Rational(10));
  auto [w, tr] = normalize(spec);
  CHECK(w == testing::sample4x4());
  CHECK(tr.n == 4);
  CHECK(!tr.is_padding(3, 3));
}

TEST_CASE("comments, blank lines and rational tokens are accepted") {
  InstanceSpec spec = parse_instance(
      "# leading comment\n"
      "\n"
      "max 2 3   # trailing comment\n"
      "1/2 -3.25 4\n"
      "-inf 0 7/2\n");
  CHECK(spec.rows == 2);
  CHECK(spec.cols == 3);
  CHECK(spec.at(0, 0).value == Rational(1, 2));
  CHECK(spec.at(0, 1).value == Rational(-13, 4));
  CHECK(spec.at(1, 0).infeasible);
  CHECK(spec.at(1, 2).value == Rational(7, 2));
}

TEST_CASE("serialization round trips") {
  InstanceSpec spec = parse_instance(fixture_text("sample4x4.txt"));
  std::string text = serialize_instance(spec, {"round trip"});
  CHECK(text.rfind("# round trip\n", 0) == 0);
  InstanceSpec again = parse_instance(text);
  CHECK(again.objective == spec.objective);
  CHECK(again.rows == spec.rows);
  CHECK(again.cols == spec.cols);
  for (int r = 0; r < spec.rows; ++r)
    for (int c = 0; c < spec.cols; ++c) {
      CHECK(again.at(r, c).infeasible == spec.at(r, c).infeasible);
      CHECK(again.at(r, c).value == spec.at(r, c).value);
    }
}

TEST_CASE("parse errors carry one-based positions") {
  try {
    parse_instance("max 2 2\n1 2\n3\n");
    FAIL("missing cell accepted");
  } catch (const ParseError& e) {
    // Scanning stops at end of input, one line past the last cell.
    CHECK(e.line() == 4);
    CHECK(e.col() == 1);
  }

  try {
    parse_instance("med 2 2\n1 2\n3 4\n");
    FAIL("bad objective accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 1);
  }

  CHECK_THROWS_AS(parse_instance(""), ParseError);
  CHECK_THROWS_AS(parse_instance("max 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("max 2 2\n1 2\n3 4\n5\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("max 2 2\n1 2\n3 x\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("max 30000 30000\n"), ParseError);
}

TEST_CASE("each objective admits only its own infeasible token") {
  CHECK_THROWS_AS(parse_instance("max 1 1\ninf\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("min 1 1\n-inf\n"), ParseError);
  CHECK(parse_instance("min 1 1\ninf\n").at(0, 0).infeasible);
  CHECK(parse_instance("max 1 1\n-inf\n").at(0, 0).infeasible);
}

TEST_CASE("rectangular instances pad to a square with absent edges") {
  InstanceSpec spec = parse_instance("max 2 3\n1 2 3\n4 5 6\n");
  auto [w, tr] = normalize(spec);
  CHECK(w.size() == 3);
  CHECK(tr.rows == 2);
  CHECK(tr.cols == 3);
  CHECK(w.at(0, 2) == fin(3));
  CHECK(w.at(2, 0).is_neg_inf());
  CHECK(tr.is_padding(2, 0));
  CHECK(!tr.is_padding(1, 2));
}

TEST_CASE("minimization negates into the max-plus domain") {
  InstanceSpec spec = parse_instance("min 2 2\n1 2\ninf 4\n");
  auto [w, tr] = normalize(spec);
  CHECK(tr.objective == Objective::kMin);
  CHECK(w.at(0, 0) == fin(-1));
  CHECK(w.at(1, 0).is_neg_inf());
  CHECK(w.at(1, 1) == fin(-4));
  CHECK(tr.display_value(fin(-4)) == "4");
  CHECK(tr.display_value(ninf()) == "inf");
  CHECK(tr.display_double(fin(-4)) == doctest::Approx(4.0));
}

TEST_CASE("a matrix wraps back into a square max instance") {
  WeightMatrix w = testing::sample4x4();
  InstanceSpec spec = spec_from_matrix(w);
  auto [again, tr] = normalize(spec);
  CHECK(again == w);
  CHECK(tr.objective == Objective::kMax);
}

TEST_CASE("splitmix64 matches its published sequence") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("bounded draws stay in range and are deterministic") {
  SplitMix64 a(99);
  SplitMix64 b(99);
  for (int i = 0; i < 1000; ++i) {
    uint64_t x = a.bounded(7);
    CHECK(x < 7);
    CHECK(x == b.bounded(7));
  }
  SplitMix64 c(7);
  CHECK(c.bounded(1) == 0);
}

TEST_CASE("generated instances are reproducible from their parameters") {
  WeightMatrix a = generate_instance(6, -5, 5, Rational(1, 5), 31337);
  WeightMatrix b = generate_instance(6, -5, 5, Rational(1, 5), 31337);
  CHECK(a == b);
  WeightMatrix c = generate_instance(6, -5, 5, Rational(1, 5), 31338);
  CHECK(!(a == c));
}

TEST_CASE("generator density and range are respected") {
  WeightMatrix full = generate_instance(8, -3, 3, Rational(0), 1);
  WeightMatrix empty = generate_instance(8, -3, 3, Rational(1), 1);
  int absent = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      CHECK(full.at(i, j).is_finite());
      const Rational& v = full.at(i, j).rational();
      CHECK(v >= Rational(-3));
      CHECK(v <= Rational(3));
      CHECK(v.is_integer());
      if (empty.at(i, j).is_neg_inf()) ++absent;
    }
  CHECK(absent == 64);
  CHECK_THROWS_AS(generate_instance(3, 5, -5, Rational(0), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_instance(3, 0, 1, Rational(2), 1),
                  std::invalid_argument);
}

}  // namespace
}  // namespace kassign
