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

#include "kassign/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "kassign/matching.hpp"

namespace kassign {

WeightMatrix WeightMatrix::from_rows(const std::vector<std::vector<ExtReal>>& rows) {
  int n = static_cast<int>(rows.size());
  WeightMatrix w(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
      throw std::invalid_argument("WeightMatrix: rows must form a square");
    for (int j = 0; j < n; ++j)
      w.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return w;
}

std::optional<Rational> WeightMatrix::max_finite() const {
  std::optional<Rational> best;
  for (const ExtReal& c : cells_) {
    if (c.is_finite() && (!best || c.rational() > *best)) best = c.rational();
  }
  return best;
}

ExtReal maxperm(const WeightMatrix& w, int bound) {
  const int n = w.size();
  if (n > bound)
    throw SizeBoundError("maxperm: size " + std::to_string(n) +
                         " exceeds brute-force bound " + std::to_string(bound));
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  ExtReal best = ExtReal::neg_inf();
  do {
    ExtReal sum = 0;
    for (int i = 0; i < n && sum.is_finite(); ++i)
      sum += w.at(i, perm[static_cast<size_t>(i)]);
    best = max(best, sum);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Matching::Matching(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
}

bool Matching::contains(int row, int col) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), std::pair<int, int>{row, col});
}

int Matching::col_of(int row) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::pair<int, int>{row, -1});
  if (it != pairs_.end() && it->first == row) return it->second;
  return -1;
}

bool Matching::is_valid(int n) const {
  std::vector<bool> row_seen(static_cast<size_t>(n), false);
  std::vector<bool> col_seen(static_cast<size_t>(n), false);
  for (auto [r, c] : pairs_) {
    if (r < 0 || c < 0 || r >= n || c >= n) return false;
    if (row_seen[static_cast<size_t>(r)] || col_seen[static_cast<size_t>(c)]) return false;
    row_seen[static_cast<size_t>(r)] = true;
    col_seen[static_cast<size_t>(c)] = true;
  }
  return true;
}

ExtReal Matching::weight(const WeightMatrix& w) const {
  ExtReal sum = 0;
  for (auto [r, c] : pairs_) {
    sum += w.at(r, c);
    if (sum.is_neg_inf()) break;
  }
  return sum;
}

Matching Matching::symmetric_difference(const std::vector<std::pair<int, int>>& edges) const {
  std::vector<std::pair<int, int>> out = pairs_;
  for (const auto& e : edges) {
    auto it = std::find(out.begin(), out.end(), e);
    if (it != out.end()) {
      out.erase(it);
    } else {
      out.push_back(e);
    }
  }
  return Matching(std::move(out));
}

std::string Matching::str() const {
  std::string s;
  for (auto [r, c] : pairs_) {
    if (!s.empty()) s += ' ';
    s += '(' + std::to_string(r + 1) + ',' + std::to_string(c + 1) + ')';
  }
  return s;
}

}  // namespace kassign
