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

#ifndef KASSIGN_COMPLETION_HPP_
#define KASSIGN_COMPLETION_HPP_

#include "kassign/parametric.hpp"
#include "kassign/sequence.hpp"

namespace kassign {

// The two assignments handed to fill_in are not linked by equal-gain
// augmenting paths, so they cannot be consecutive optima.
class NotAdjacentError : public std::domain_error {
 public:
  explicit NotAdjacentError(const std::string& what) : std::domain_error(what) {}
};

// One alternating component of the symmetric difference of two assignments.
struct AltPath {
  std::vector<std::pair<int, int>> small_edges;  // from the smaller assignment
  std::vector<std::pair<int, int>> large_edges;  // from the larger assignment
  bool is_cycle = false;
  // For augmenting paths: the row covered by the larger assignment only.
  int row_end = -1;

  std::vector<std::pair<int, int>> all_edges() const;
  ExtReal small_weight(const WeightMatrix& w) const;
  ExtReal large_weight(const WeightMatrix& w) const;
};

// Symmetric-difference decomposition of two assignments into (i) shared
// edges, (ii) balanced components with equally many edges from both sides
// (paths and cycles), (iii) paths augmenting the larger assignment against
// the smaller one, and (iv) the reverse.
struct PathDecomposition {
  std::vector<std::pair<int, int>> shared;
  std::vector<AltPath> balanced;
  std::vector<AltPath> augmenting;
  std::vector<AltPath> reverse_augmenting;
};

PathDecomposition decompose(const Matching& small, const Matching& large,
                            int n);

// Intermediate optima between two assignments d = |large| - |small| apart:
// applies the d-1 best augmenting paths one at a time, highest gain first
// (ties by lowest row endpoint).  Consecutive optima force every applied
// gain to equal (w(large) - w(small)) / d exactly; any violation throws
// NotAdjacentError.  Runs in O(d n) plus the decomposition itself.
std::vector<Matching> fill_in(const WeightMatrix& w, const Matching& small,
                              const Matching& large);

// Full sequence from a parametric sweep: anchors at the visited
// cardinalities (plus the empty assignment), fill-in across every gap,
// -inf past the last report.
AssignmentSequence complete_sequence(const WeightMatrix& w, const GkResult& gk);

}  // namespace kassign

#endif  // KASSIGN_COMPLETION_HPP_
