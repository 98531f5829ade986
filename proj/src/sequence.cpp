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

#include "kassign/sequence.hpp"

namespace kassign {

const char* to_string(SolverKind k) {
  switch (k) {
    case SolverKind::kBruteForce: return "brute";
    case SolverKind::kSuccessivePaths: return "ssp";
    case SolverKind::kParametric: return "gk";
    case SolverKind::kParametricFill: return "gk-fill";
  }
  return "?";
}

MaxPolynomial AssignmentSequence::fullchar() const {
  std::vector<ExtReal> coeffs(static_cast<size_t>(n) + 1, ExtReal::neg_inf());
  for (int k = 0; k <= n; ++k)
    coeffs[static_cast<size_t>(n - k)] = omegas[static_cast<size_t>(k)];
  return MaxPolynomial(std::move(coeffs));
}

std::vector<TermClass> AssignmentSequence::classes_by_k() const {
  MaxPolynomial chi = fullchar();
  std::vector<TermClass> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out.push_back(chi.classify_term(n - k));
  return out;
}

int AssignmentSequence::last_finite() const {
  int last = 0;
  for (int k = 1; k <= n; ++k)
    if (omegas[static_cast<size_t>(k)].is_finite()) last = k;
  return last;
}

bool AssignmentSequence::is_concave() const {
  int last = last_finite();
  for (int k = 1; k <= last; ++k)
    if (omegas[static_cast<size_t>(k)].is_neg_inf()) return false;
  for (int k = 1; k + 1 <= last; ++k) {
    ExtReal left = omegas[static_cast<size_t>(k)] - omegas[static_cast<size_t>(k - 1)];
    ExtReal right = omegas[static_cast<size_t>(k + 1)] - omegas[static_cast<size_t>(k)];
    if (right > left) return false;
  }
  return true;
}

}  // namespace kassign
