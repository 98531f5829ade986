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

#include "kassign/oracle.hpp"

#include <string>

namespace kassign {

namespace {

struct Enumerator {
  const WeightMatrix& w;
  int k;
  std::vector<int> rows;        // chosen rows, ascending
  std::vector<bool> col_used;
  std::vector<int> cols;        // cols[i] pairs with rows[i]
  ExtReal best = ExtReal::neg_inf();
  std::vector<int> best_cols;
  std::vector<int> best_rows;
  bool found = false;

  explicit Enumerator(const WeightMatrix& w_, int k_)
      : w(w_), k(k_), col_used(static_cast<size_t>(w_.size()), false) {}

  void columns(size_t depth, const ExtReal& acc) {
    if (depth == rows.size()) {
      // Strict improvement keeps the first optimum in enumeration order.
      if (acc.is_finite() && (!found || acc > best)) {
        best = acc;
        best_rows = rows;
        best_cols = cols;
        found = true;
      }
      return;
    }
    for (int j = 0; j < w.size(); ++j) {
      if (col_used[static_cast<size_t>(j)]) continue;
      const ExtReal& cell = w.at(rows[depth], j);
      if (cell.is_neg_inf()) continue;
      col_used[static_cast<size_t>(j)] = true;
      cols.push_back(j);
      columns(depth + 1, acc + cell);
      cols.pop_back();
      col_used[static_cast<size_t>(j)] = false;
    }
  }

  void row_subsets(int next) {
    if (static_cast<int>(rows.size()) == k) {
      columns(0, ExtReal(0));
      return;
    }
    for (int i = next; i < w.size(); ++i) {
      rows.push_back(i);
      row_subsets(i + 1);
      rows.pop_back();
    }
  }
};

}  // namespace

BruteForceResult brute_force_k(const WeightMatrix& w, int k, int bound) {
  const int n = w.size();
  if (n > bound)
    throw SizeBoundError("brute_force_k: size " + std::to_string(n) +
                         " exceeds brute-force bound " + std::to_string(bound));
  if (k < 0 || k > n)
    throw std::invalid_argument("brute_force_k: cardinality out of range");
  if (k == 0) return {ExtReal(0), Matching{}};
  Enumerator e(w, k);
  e.row_subsets(0);
  BruteForceResult out;
  if (e.found) {
    out.weight = e.best;
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < e.best_rows.size(); ++i)
      pairs.emplace_back(e.best_rows[i], e.best_cols[i]);
    out.matching = Matching(std::move(pairs));
  }
  return out;
}

AssignmentSequence solve_sequence_brute(const WeightMatrix& w, bool want_matchings,
                                        int bound) {
  const int n = w.size();
  AssignmentSequence seq;
  seq.n = n;
  seq.source = SolverKind::kBruteForce;
  seq.omegas.assign(static_cast<size_t>(n) + 1, ExtReal::neg_inf());
  seq.matchings.assign(static_cast<size_t>(n) + 1, std::nullopt);
  for (int k = 0; k <= n; ++k) {
    BruteForceResult r = brute_force_k(w, k, bound);
    seq.omegas[static_cast<size_t>(k)] = r.weight;
    if (want_matchings) seq.matchings[static_cast<size_t>(k)] = std::move(r.matching);
  }
  return seq;
}

MaxPolynomial brute_force_fullchar(const WeightMatrix& w, int bound) {
  return solve_sequence_brute(w, false, bound).fullchar();
}

}  // namespace kassign
