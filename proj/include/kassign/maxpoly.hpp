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

#ifndef KASSIGN_MAXPOLY_HPP_
#define KASSIGN_MAXPOLY_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "kassign/extreal.hpp"

namespace kassign {

// Term classification within a maxpolynomial.  A term is essential when it
// wins the max alone on an open interval, semi-essential when it touches the
// upper envelope only at a single point, and inessential when it never
// determines the envelope.
enum class TermClass { kEssential, kSemiEssential, kInessential };

std::string to_string(TermClass c);

struct RootEntry {
  ExtReal value;
  int multiplicity = 0;

  friend bool operator==(const RootEntry& a, const RootEntry& b) {
    return a.value == b.value && a.multiplicity == b.multiplicity;
  }
};
using RootList = std::vector<RootEntry>;

// Thrown when an operation needs at least one finite coefficient.
class AllNegInfError : public std::domain_error {
 public:
  AllNegInfError() : std::domain_error("maxpolynomial has no finite coefficient") {}
};

// Maxpolynomial p(x) = max_k (a_k + k*x), stored as coefficients a_0..a_d by
// ascending power.  Coefficients are exact; -inf marks an absent term.
class MaxPolynomial {
 public:
  // coeffs[k] is the coefficient of x^k; the list must be non-empty.
  explicit MaxPolynomial(std::vector<ExtReal> coeffs);

  // Builds from the coefficient of the highest power downward, the order used
  // by the printed form.
  static MaxPolynomial from_descending(std::vector<ExtReal> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const ExtReal& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
  const std::vector<ExtReal>& coeffs() const { return coeffs_; }
  std::vector<ExtReal> descending() const;

  bool all_neg_inf() const;

  // Value of the upper envelope at x.  At x = -inf every positive power
  // vanishes and the constant term remains.
  ExtReal eval(const ExtReal& x) const;

  // Full canonical form: the pointwise-least concave coefficient sequence
  // with the same envelope.  Interior gaps are lifted onto the upper concave
  // hull of the finite terms; leading and trailing -inf runs are preserved.
  MaxPolynomial canonicalized() const;

  // True when the coefficient sequence is already concave over its finite
  // support with no interior -inf, i.e. canonicalized() would be a no-op.
  bool is_full_canonical() const;

  // Tropical roots with multiplicities, in ascending order, computed on the
  // full canonical form as the consecutive coefficient differences
  // a_{k-1} - a_k.  Absent top powers (-inf above the last finite
  // coefficient) reduce the effective degree; a run of j absent low powers
  // contributes the root -inf with multiplicity j.  Multiplicities sum to
  // the effective degree.  Throws AllNegInfError when no coefficient is
  // finite.
  RootList roots() const;

  TermClass classify_term(int k) const;
  std::vector<TermClass> term_classes() const;

  // Printed form, highest power first, " (+) " separated: coefficient 0 is
  // omitted before a positive power, power 1 drops the exponent, and -inf
  // terms are skipped.  A polynomial with no finite term prints as "-inf".
  std::string text() const;

  friend bool operator==(const MaxPolynomial& a, const MaxPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<ExtReal> coeffs_;
};

}  // namespace kassign

#endif  // KASSIGN_MAXPOLY_HPP_
