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

#ifndef KASSIGN_ORACLE_HPP_
#define KASSIGN_ORACLE_HPP_

#include <optional>

#include "kassign/sequence.hpp"

namespace kassign {

// Default guard for the exponential reference routines.
inline constexpr int kBruteForceBound = 9;

struct BruteForceResult {
  ExtReal weight = ExtReal::neg_inf();
  // Witness with the best weight; absent when no cardinality-k assignment
  // has finite weight.  Ties are broken deterministically by enumeration
  // order: row subsets ascending, then column tuples in lexicographic
  // order, keeping the first optimum found.
  std::optional<Matching> matching;
};

// Best assignment of cardinality exactly k by exhaustive enumeration.
BruteForceResult brute_force_k(const WeightMatrix& w, int k,
                               int bound = kBruteForceBound);

// All cardinalities 0..n by exhaustive enumeration.
AssignmentSequence solve_sequence_brute(const WeightMatrix& w,
                                        bool want_matchings = true,
                                        int bound = kBruteForceBound);

// Full characteristic maxpolynomial via brute_force_k for every k.
MaxPolynomial brute_force_fullchar(const WeightMatrix& w,
                                   int bound = kBruteForceBound);

}  // namespace kassign

#endif  // KASSIGN_ORACLE_HPP_
