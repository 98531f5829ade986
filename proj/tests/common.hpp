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

#ifndef KASSIGN_TESTS_COMMON_HPP_
#define KASSIGN_TESTS_COMMON_HPP_

#include <vector>

#include "kassign/matrix.hpp"

namespace kassign::testing {

inline ExtReal fin(long long v) { return ExtReal(v); }
inline ExtReal fin(long long num, long long den) {
  return ExtReal(Rational(num, den));
}
inline ExtReal ninf() { return ExtReal::neg_inf(); }

// The 4x4 sample instance used throughout the suite.  Its sequence is
// omega = (0, 10, 18, 23, 23) with every term essential, so it exercises
// all solver paths without fill-in gaps.
inline WeightMatrix sample4x4() {
  return WeightMatrix::from_rows({
      {ninf(), fin(8), fin(5), fin(0)},
      {fin(10), fin(8), fin(5), ninf()},
      {fin(8), fin(0), fin(5), fin(4)},
      {fin(5), fin(4), ninf(), ninf()},
  });
}

}  // namespace kassign::testing

#endif  // KASSIGN_TESTS_COMMON_HPP_
