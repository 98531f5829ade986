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

#ifndef KASSIGN_MATCHING_HPP_
#define KASSIGN_MATCHING_HPP_

#include <string>
#include <utility>
#include <vector>

#include "kassign/matrix.hpp"

namespace kassign {

// An assignment: a set of (row, col) pairs, 0-based, with distinct rows and
// distinct columns.  Pairs are kept sorted by row so equal matchings compare
// equal.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<std::pair<int, int>> pairs);

  int size() const { return static_cast<int>(pairs_.size()); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  bool contains(int row, int col) const;

  // Column matched to a row, or -1.
  int col_of(int row) const;

  // True when rows and columns are pairwise distinct and fit inside an
  // n-by-n matrix.
  bool is_valid(int n) const;

  // Sum of the matched weights; -inf if any matched entry is absent.
  ExtReal weight(const WeightMatrix& w) const;

  // Symmetric difference with an edge set (typically an alternating path or
  // cycle): matched edges in `edges` leave, unmatched ones enter.
  Matching symmetric_difference(const std::vector<std::pair<int, int>>& edges) const;

  // "(r1,c1) (r2,c2) ..." with 1-based indices.
  std::string str() const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.pairs_ == b.pairs_;
  }
  friend bool operator<(const Matching& a, const Matching& b) {
    return a.pairs_ < b.pairs_;
  }

 private:
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace kassign

#endif  // KASSIGN_MATCHING_HPP_
