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

#include "kassign/ssp.hpp"

namespace kassign {

namespace {

// Node layout: source, then rows, then columns, then sink.
struct Graph {
  int n;
  int source;
  int sink;
  int node_count;

  explicit Graph(int n_) : n(n_), source(0), sink(2 * n_ + 1), node_count(2 * n_ + 2) {}
  int row(int i) const { return 1 + i; }
  int col(int j) const { return 1 + n + j; }
};

}  // namespace

AssignmentSequence solve_sequence_ssp(const WeightMatrix& w, bool want_matchings) {
  const int n = w.size();
  const Graph g(n);

  // cost(i, j) = -w(i, j); absent edges are skipped entirely.
  auto cost = [&](int i, int j) { return -w.at(i, j).rational(); };
  auto present = [&](int i, int j) { return w.at(i, j).is_finite(); };

  // Potentials chosen so all initial reduced costs are non-negative:
  // pi = 0 on source and rows, column minimum on columns, overall minimum on
  // the sink.  Columns with no present edge get 0 (they are unreachable).
  std::vector<Rational> pi(static_cast<size_t>(g.node_count), Rational(0));
  for (int j = 0; j < n; ++j) {
    bool any = false;
    Rational best;
    for (int i = 0; i < n; ++i) {
      if (!present(i, j)) continue;
      Rational c = cost(i, j);
      if (!any || c < best) {
        best = c;
        any = true;
      }
    }
    if (any) pi[static_cast<size_t>(g.col(j))] = best;
  }
  {
    Rational sink_pi = pi[static_cast<size_t>(g.col(0))];
    for (int j = 1; j < n; ++j)
      sink_pi = std::min(sink_pi, pi[static_cast<size_t>(g.col(j))]);
    if (n > 0) pi[static_cast<size_t>(g.sink)] = sink_pi;
  }

  std::vector<int> row_mate(static_cast<size_t>(n), -1);
  std::vector<int> col_mate(static_cast<size_t>(n), -1);

  AssignmentSequence seq;
  seq.n = n;
  seq.source = SolverKind::kSuccessivePaths;
  seq.omegas.assign(static_cast<size_t>(n) + 1, ExtReal::neg_inf());
  seq.matchings.assign(static_cast<size_t>(n) + 1, std::nullopt);
  seq.omegas[0] = ExtReal(0);
  if (want_matchings) seq.matchings[0] = Matching{};

  Rational total_cost(0);

  std::vector<Rational> dist(static_cast<size_t>(g.node_count));
  std::vector<bool> reached(static_cast<size_t>(g.node_count));
  std::vector<bool> settled(static_cast<size_t>(g.node_count));
  std::vector<int> parent(static_cast<size_t>(g.node_count));

  for (int k = 1; k <= n; ++k) {
    std::fill(reached.begin(), reached.end(), false);
    std::fill(settled.begin(), settled.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    dist[static_cast<size_t>(g.source)] = Rational(0);
    reached[static_cast<size_t>(g.source)] = true;

    auto relax = [&](int from, int to, const Rational& edge_cost) {
      Rational cand = dist[static_cast<size_t>(from)] + edge_cost +
                      pi[static_cast<size_t>(from)] - pi[static_cast<size_t>(to)];
      if (!reached[static_cast<size_t>(to)] || cand < dist[static_cast<size_t>(to)]) {
        dist[static_cast<size_t>(to)] = cand;
        reached[static_cast<size_t>(to)] = true;
        parent[static_cast<size_t>(to)] = from;
      }
    };

    bool sink_settled = false;
    for (;;) {
      int u = -1;
      for (int x = 0; x < g.node_count; ++x) {
        if (!reached[static_cast<size_t>(x)] || settled[static_cast<size_t>(x)]) continue;
        if (u < 0 || dist[static_cast<size_t>(x)] < dist[static_cast<size_t>(u)]) u = x;
      }
      if (u < 0) break;
      settled[static_cast<size_t>(u)] = true;
      if (u == g.sink) {
        sink_settled = true;
        break;
      }
      if (u == g.source) {
        for (int i = 0; i < n; ++i)
          if (row_mate[static_cast<size_t>(i)] < 0) relax(u, g.row(i), Rational(0));
      } else if (u <= n) {
        int i = u - 1;
        for (int j = 0; j < n; ++j)
          if (present(i, j) && row_mate[static_cast<size_t>(i)] != j)
            relax(u, g.col(j), cost(i, j));
      } else {
        int j = u - 1 - n;
        int i = col_mate[static_cast<size_t>(j)];
        if (i >= 0) {
          relax(u, g.row(i), -cost(i, j));
        } else {
          relax(u, g.sink, Rational(0));
        }
      }
    }

    if (!sink_settled) break;  // no augmenting path; the rest stays -inf

    const Rational sink_dist = dist[static_cast<size_t>(g.sink)];
    total_cost += sink_dist + pi[static_cast<size_t>(g.sink)];

    // pi(x) += min(D(x), D(sink)); unsettled labels are >= D(sink).
    for (int x = 0; x < g.node_count; ++x) {
      Rational d = (reached[static_cast<size_t>(x)] && settled[static_cast<size_t>(x)])
                       ? dist[static_cast<size_t>(x)]
                       : sink_dist;
      pi[static_cast<size_t>(x)] += std::min(d, sink_dist);
    }

    // Flip matched state along source -> ... -> sink.
    int x = parent[static_cast<size_t>(g.sink)];
    while (x != g.source) {
      int j = x - 1 - n;        // x alternates col, row, col, ...
      int p = parent[static_cast<size_t>(x)];
      int i = p - 1;
      row_mate[static_cast<size_t>(i)] = j;
      col_mate[static_cast<size_t>(j)] = i;
      x = parent[static_cast<size_t>(p)];
    }

    seq.omegas[static_cast<size_t>(k)] = ExtReal(-total_cost);
    if (want_matchings) {
      std::vector<std::pair<int, int>> pairs;
      pairs.reserve(static_cast<size_t>(k));
      for (int i = 0; i < n; ++i)
        if (row_mate[static_cast<size_t>(i)] >= 0)
          pairs.emplace_back(i, row_mate[static_cast<size_t>(i)]);
      seq.matchings[static_cast<size_t>(k)] = Matching(std::move(pairs));
    }
  }

  return seq;
}

}  // namespace kassign
