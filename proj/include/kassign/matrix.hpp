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

#ifndef KASSIGN_MATRIX_HPP_
#define KASSIGN_MATRIX_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "kassign/extreal.hpp"

namespace kassign {

// Thrown by exponential-time reference routines when the instance exceeds
// their size guard.
class SizeBoundError : public std::length_error {
 public:
  explicit SizeBoundError(const std::string& what) : std::length_error(what) {}
};

// Square max-plus weight matrix.  -inf entries mark absent edges.
class WeightMatrix {
 public:
  explicit WeightMatrix(int n, ExtReal fill = ExtReal::neg_inf())
      : n_(n), cells_(static_cast<size_t>(n) * static_cast<size_t>(n), fill) {
    if (n <= 0) throw std::invalid_argument("WeightMatrix: size must be positive");
  }

  static WeightMatrix from_rows(const std::vector<std::vector<ExtReal>>& rows);

  int size() const { return n_; }

  ExtReal& at(int i, int j) { return cells_[index(i, j)]; }
  const ExtReal& at(int i, int j) const { return cells_[index(i, j)]; }

  // Largest finite entry, if any.
  std::optional<Rational> max_finite() const;

  bool operator==(const WeightMatrix& o) const {
    return n_ == o.n_ && cells_ == o.cells_;
  }

 private:
  size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
      throw std::out_of_range("WeightMatrix: index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
  }

  int n_;
  std::vector<ExtReal> cells_;
};

// Maximum over all n! permutations of the diagonal sum, i.e. the max-plus
// permanent.  Exponential; guarded by the size bound.
ExtReal maxperm(const WeightMatrix& w, int bound = 9);

}  // namespace kassign

#endif  // KASSIGN_MATRIX_HPP_
