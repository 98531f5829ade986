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

#ifndef KASSIGN_SSP_HPP_
#define KASSIGN_SSP_HPP_

#include "kassign/sequence.hpp"

namespace kassign {

// Solves all cardinalities by successive shortest augmenting paths on the
// min-cost flow formulation (costs are negated weights).  Node potentials
// keep every reduced cost non-negative, so each phase is one Dijkstra pass
// over a dense graph: O(n^2) per cardinality, O(n^3) overall.  Exact
// arithmetic throughout; deterministic tie-break (lowest node index among
// equal distances, first-found parent kept).
//
// The augmenting paths are shortest, so consecutive optima are linked by one
// path: every witness pair satisfies |M_{k+1} sym-diff M_k| odd, forming a
// single alternating path.
AssignmentSequence solve_sequence_ssp(const WeightMatrix& w,
                                      bool want_matchings = true);

}  // namespace kassign

#endif  // KASSIGN_SSP_HPP_
