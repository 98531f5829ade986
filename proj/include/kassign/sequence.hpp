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

#ifndef KASSIGN_SEQUENCE_HPP_
#define KASSIGN_SEQUENCE_HPP_

#include <optional>
#include <vector>

#include "kassign/matching.hpp"
#include "kassign/maxpoly.hpp"
#include "kassign/matrix.hpp"

namespace kassign {

enum class SolverKind { kBruteForce, kSuccessivePaths, kParametric, kParametricFill };

const char* to_string(SolverKind k);

// The solved sequence of k-cardinality assignments for one matrix.
// omegas[k] is the best weight over assignments of cardinality exactly k;
// omegas[0] = 0 by convention and -inf marks infeasible cardinalities,
// which always form a suffix.  matchings[k], when present, is a witness.
struct AssignmentSequence {
  int n = 0;
  SolverKind source = SolverKind::kBruteForce;
  std::vector<ExtReal> omegas;
  std::vector<std::optional<Matching>> matchings;

  // Full characteristic maxpolynomial: omega_k is the coefficient of
  // x^(n-k), with the leading coefficient 0.
  MaxPolynomial fullchar() const;

  // Class of the x^(n-k) term of fullchar(), indexed by k = 0..n.
  std::vector<TermClass> classes_by_k() const;

  // Largest k with finite omega_k (0 when only the empty assignment works).
  int last_finite() const;

  // True when the increments omega_k - omega_{k-1} are non-increasing over
  // the finite prefix and the -inf values form a suffix.
  bool is_concave() const;
};

}  // namespace kassign

#endif  // KASSIGN_SEQUENCE_HPP_
