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

#include "kassign/completion.hpp"

#include <algorithm>

namespace kassign {

std::vector<std::pair<int, int>> AltPath::all_edges() const {
  std::vector<std::pair<int, int>> out = small_edges;
  out.insert(out.end(), large_edges.begin(), large_edges.end());
  return out;
}

ExtReal AltPath::small_weight(const WeightMatrix& w) const {
  ExtReal sum = 0;
  for (auto [r, c] : small_edges) sum += w.at(r, c);
  return sum;
}

ExtReal AltPath::large_weight(const WeightMatrix& w) const {
  ExtReal sum = 0;
  for (auto [r, c] : large_edges) sum += w.at(r, c);
  return sum;
}

namespace {

// Rows and columns carry at most one edge per side, so the symmetric
// difference is a disjoint union of alternating paths and cycles.
struct Walker {
  int n;
  std::vector<int> small_row, large_row;  // col matched to a row, or -1
  std::vector<int> small_col, large_col;  // row matched to a col, or -1
  std::vector<char> used_small, used_large;  // per row

  Walker(const Matching& small, const Matching& large, int n_)
      : n(n_),
        small_row(static_cast<size_t>(n_), -1),
        large_row(static_cast<size_t>(n_), -1),
        small_col(static_cast<size_t>(n_), -1),
        large_col(static_cast<size_t>(n_), -1),
        used_small(static_cast<size_t>(n_), 0),
        used_large(static_cast<size_t>(n_), 0) {
    for (auto [r, c] : small.pairs()) {
      small_row[static_cast<size_t>(r)] = c;
      small_col[static_cast<size_t>(c)] = r;
    }
    for (auto [r, c] : large.pairs()) {
      large_row[static_cast<size_t>(r)] = c;
      large_col[static_cast<size_t>(c)] = r;
    }
    // Shared edges take part in neither component.
    for (int r = 0; r < n; ++r) {
      if (small_row[static_cast<size_t>(r)] >= 0 &&
          small_row[static_cast<size_t>(r)] == large_row[static_cast<size_t>(r)]) {
        used_small[static_cast<size_t>(r)] = used_large[static_cast<size_t>(r)] = 1;
      }
    }
  }

  bool row_has_small(int r) const {
    return small_row[static_cast<size_t>(r)] >= 0 && !used_small[static_cast<size_t>(r)];
  }
  bool row_has_large(int r) const {
    return large_row[static_cast<size_t>(r)] >= 0 && !used_large[static_cast<size_t>(r)];
  }
  bool col_has_small(int c) const {
    int r = small_col[static_cast<size_t>(c)];
    return r >= 0 && !used_small[static_cast<size_t>(r)];
  }
  bool col_has_large(int c) const {
    int r = large_col[static_cast<size_t>(c)];
    return r >= 0 && !used_large[static_cast<size_t>(r)];
  }

  // Walks the component from row r, first leaving through the given side,
  // consuming edges.  Each hop takes the row's departure edge and then the
  // opposite-side edge of the column it lands on; the walk stops at a bare
  // column, at a row missing its continuation, or when a cycle closes onto
  // an already-consumed edge.
  void trace_from_row(int r0, bool leave_small, AltPath* out) {
    int r = r0;
    for (;;) {
      if (leave_small) {
        if (!row_has_small(r)) break;
        int c = small_row[static_cast<size_t>(r)];
        used_small[static_cast<size_t>(r)] = 1;
        out->small_edges.push_back({r, c});
        int r2 = large_col[static_cast<size_t>(c)];
        if (r2 < 0 || used_large[static_cast<size_t>(r2)]) break;
        used_large[static_cast<size_t>(r2)] = 1;
        out->large_edges.push_back({r2, c});
        r = r2;
      } else {
        if (!row_has_large(r)) break;
        int c = large_row[static_cast<size_t>(r)];
        used_large[static_cast<size_t>(r)] = 1;
        out->large_edges.push_back({r, c});
        int r2 = small_col[static_cast<size_t>(c)];
        if (r2 < 0 || used_small[static_cast<size_t>(r2)]) break;
        used_small[static_cast<size_t>(r2)] = 1;
        out->small_edges.push_back({r2, c});
        r = r2;
      }
    }
  }

  // Walks a component that ends in a column: consume the column's edge and
  // continue from its row through the opposite side.
  void trace_from_col(int c, bool via_small, AltPath* out) {
    if (via_small) {
      int r = small_col[static_cast<size_t>(c)];
      used_small[static_cast<size_t>(r)] = 1;
      out->small_edges.push_back({r, c});
      trace_from_row(r, false, out);
    } else {
      int r = large_col[static_cast<size_t>(c)];
      used_large[static_cast<size_t>(r)] = 1;
      out->large_edges.push_back({r, c});
      trace_from_row(r, true, out);
    }
  }
};

}  // namespace

PathDecomposition decompose(const Matching& small, const Matching& large, int n) {
  PathDecomposition out;
  Walker walk(small, large, n);

  for (auto [r, c] : small.pairs())
    if (large.contains(r, c)) out.shared.push_back({r, c});

  auto classify = [&](AltPath&& p) {
    const size_t s = p.small_edges.size(), l = p.large_edges.size();
    if (s == l) {
      out.balanced.push_back(std::move(p));
    } else if (l > s) {
      out.augmenting.push_back(std::move(p));
    } else {
      out.reverse_augmenting.push_back(std::move(p));
    }
  };

  // Components with a row endpoint (all augmenting paths have one; an
  // augmenting path of the larger assignment ends at a row it alone covers).
  // Scanning rows in order keeps the output deterministic.
  for (int r = 0; r < n; ++r) {
    const bool has_s = walk.row_has_small(r), has_l = walk.row_has_large(r);
    if (has_s == has_l) continue;  // interior row or untouched
    AltPath p;
    walk.trace_from_row(r, has_s, &p);
    if (p.large_edges.size() > p.small_edges.size()) p.row_end = r;
    classify(std::move(p));
  }
  // Components with both endpoints in columns; these are always balanced.
  for (int c = 0; c < n; ++c) {
    const bool has_s = walk.col_has_small(c), has_l = walk.col_has_large(c);
    if (has_s == has_l) continue;
    AltPath p;
    walk.trace_from_col(c, has_s, &p);
    classify(std::move(p));
  }
  // Everything left is a cycle.
  for (int r = 0; r < n; ++r) {
    if (!walk.row_has_small(r)) continue;
    AltPath p;
    p.is_cycle = true;
    walk.trace_from_row(r, true, &p);
    classify(std::move(p));
  }
  return out;
}

std::vector<Matching> fill_in(const WeightMatrix& w, const Matching& small,
                              const Matching& large) {
  const int d = large.size() - small.size();
  if (d < 1) throw std::invalid_argument("fill_in: assignments are not nested in size");
  if (d == 1) return {};

  PathDecomposition dec = decompose(small, large, w.size());
  if (static_cast<int>(dec.augmenting.size()) < d)
    throw NotAdjacentError("fill_in: fewer augmenting paths than the cardinality gap");

  ExtReal small_w = small.weight(w);
  ExtReal large_w = large.weight(w);
  if (small_w.is_neg_inf() || large_w.is_neg_inf())
    throw NotAdjacentError("fill_in: an endpoint assignment has weight -inf");
  const ExtReal gap = large_w - small_w;
  const ExtReal share = gap.scaled(Rational(1, d));

  struct Scored {
    ExtReal gain;
    int row_end;
    const AltPath* path;
  };
  std::vector<Scored> scored;
  scored.reserve(dec.augmenting.size());
  for (const AltPath& p : dec.augmenting) {
    ExtReal sw = p.small_weight(w);
    if (sw.is_neg_inf())
      throw NotAdjacentError("fill_in: augmenting path removes a -inf edge");
    scored.push_back({p.large_weight(w) - sw, p.row_end, &p});
  }
  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    if (a.gain != b.gain) return a.gain > b.gain;
    return a.row_end < b.row_end;
  });

  for (int i = 0; i < d; ++i) {
    if (scored[static_cast<size_t>(i)].gain != share)
      throw NotAdjacentError("fill_in: augmenting gain " +
                             scored[static_cast<size_t>(i)].gain.str() +
                             " differs from the equal share " + share.str());
  }

  std::vector<Matching> out;
  out.reserve(static_cast<size_t>(d) - 1);
  Matching cur = small;
  for (int i = 0; i + 1 < d; ++i) {
    cur = cur.symmetric_difference(scored[static_cast<size_t>(i)].path->all_edges());
    out.push_back(cur);
  }
  return out;
}

AssignmentSequence complete_sequence(const WeightMatrix& w, const GkResult& gk) {
  const int n = gk.n;
  AssignmentSequence seq;
  seq.n = n;
  seq.source = SolverKind::kParametricFill;
  seq.omegas.assign(static_cast<size_t>(n) + 1, ExtReal::neg_inf());
  seq.matchings.assign(static_cast<size_t>(n) + 1, std::nullopt);
  seq.omegas[0] = ExtReal(0);
  seq.matchings[0] = Matching{};

  int prev_k = 0;
  Matching prev;
  for (const auto& [k, rep] : gk.reports) {
    seq.omegas[static_cast<size_t>(k)] = rep.omega;
    seq.matchings[static_cast<size_t>(k)] = rep.matching;
    if (k - prev_k >= 2) {
      std::vector<Matching> mid = fill_in(w, prev, rep.matching);
      for (size_t t = 0; t < mid.size(); ++t) {
        int kk = prev_k + 1 + static_cast<int>(t);
        seq.omegas[static_cast<size_t>(kk)] = mid[t].weight(w);
        seq.matchings[static_cast<size_t>(kk)] = std::move(mid[t]);
      }
    }
    prev_k = k;
    prev = rep.matching;
  }
  return seq;
}

}  // namespace kassign
