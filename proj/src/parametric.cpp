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

#include "kassign/parametric.hpp"

#include <algorithm>

namespace kassign {

namespace {

int kind_rank(EdgeKind k) {
  switch (k) {
    case EdgeKind::kRoot: return 0;
    case EdgeKind::kConst: return 1;
    case EdgeKind::kParam: return 2;
  }
  return 3;
}

}  // namespace

std::string GkSolver::vertex_name(int n, int vertex) {
  if (vertex == 0) return "r";
  if (vertex <= n) return "u" + std::to_string(vertex);
  return "v" + std::to_string(vertex - n);
}

std::string GkTraceEvent::str(int n) const {
  if (kind == Kind::kPivot) {
    return "PIVOT q=" + GkSolver::vertex_name(n, q) +
           " e=" + GkSolver::vertex_name(n, edge.src) + "->" +
           GkSolver::vertex_name(n, edge.dst) + " key=" + key.str();
  }
  return "CYCLE b=" + b.str() + " d=" + std::to_string(d) +
         " k=" + std::to_string(k);
}

std::vector<ExtReal> GkResult::omegas() const {
  std::vector<ExtReal> out;
  out.reserve(static_cast<size_t>(n) + 1);
  out.push_back(ExtReal(0));
  for (const SingularValue& s : singular_values)
    for (int t = 0; t < s.multiplicity; ++t) out.push_back(out.back() + s.value);
  return out;
}

MaxPolynomial GkResult::fullchar() const {
  std::vector<ExtReal> om = omegas();
  std::vector<ExtReal> coeffs(om.size(), ExtReal::neg_inf());
  for (size_t k = 0; k < om.size(); ++k) coeffs[om.size() - 1 - k] = om[k];
  return MaxPolynomial(std::move(coeffs));
}

AssignmentSequence GkResult::sequence() const {
  AssignmentSequence seq;
  seq.n = n;
  seq.source = SolverKind::kParametric;
  seq.omegas = omegas();
  seq.matchings.assign(static_cast<size_t>(n) + 1, std::nullopt);
  seq.matchings[0] = Matching{};
  for (const auto& [k, rep] : reports)
    seq.matchings[static_cast<size_t>(k)] = rep.matching;
  return seq;
}

GkSolver::GkSolver(const WeightMatrix& w, GkOptions opt)
    : n_(w.size()),
      opt_(opt),
      w_(w),
      vcount_(2 * w.size() + 1),
      parent_(static_cast<size_t>(vcount_), -1),
      parent_kind_(static_cast<size_t>(vcount_), EdgeKind::kRoot),
      children_(static_cast<size_t>(vcount_)),
      wc_(static_cast<size_t>(vcount_), ExtReal::neg_inf()),
      wx_(static_cast<size_t>(vcount_), 0),
      key_(static_cast<size_t>(vcount_), ExtReal::neg_inf()),
      key_src_(static_cast<size_t>(vcount_), -1),
      key_kind_(static_cast<size_t>(vcount_), EdgeKind::kRoot),
      row_mate_(static_cast<size_t>(n_), -1),
      row_kind_(static_cast<size_t>(n_), EdgeKind::kParam),
      col_mate_(static_cast<size_t>(n_), -1),
      mark_(static_cast<size_t>(vcount_), 0) {
  // Start from the all-parametric diagonal assignment.
  for (int i = 0; i < n_; ++i) {
    row_mate_[static_cast<size_t>(i)] = i;
    col_mate_[static_cast<size_t>(i)] = i;
  }

  auto mf = w_.max_finite();
  b0_ = mf ? ExtReal(*mf + Rational(1)) : ExtReal(0);
  b_ = b0_;

  // Initial longest-path tree, valid for x >= b0: every row hangs off the
  // root; column 1 hangs off row 2 and every other column off row 1, all by
  // forward parametric edges (those are off-diagonal, hence unmatched).
  wc_[0] = ExtReal(0);
  for (int i = 0; i < n_; ++i) {
    parent_[static_cast<size_t>(uvert(i))] = 0;
    parent_kind_[static_cast<size_t>(uvert(i))] = EdgeKind::kRoot;
    wc_[static_cast<size_t>(uvert(i))] = ExtReal(0);
  }
  if (n_ == 1) {
    // Single pair: v1 is reachable only through the constant edge.
    if (w_.at(0, 0).is_finite()) {
      parent_[static_cast<size_t>(vvert(0))] = uvert(0);
      parent_kind_[static_cast<size_t>(vvert(0))] = EdgeKind::kConst;
      wc_[static_cast<size_t>(vvert(0))] = w_.at(0, 0);
    }
  } else {
    for (int j = 0; j < n_; ++j) {
      int host = j == 0 ? 1 : 0;
      parent_[static_cast<size_t>(vvert(j))] = uvert(host);
      parent_kind_[static_cast<size_t>(vvert(j))] = EdgeKind::kParam;
      wc_[static_cast<size_t>(vvert(j))] = ExtReal(0);
      wx_[static_cast<size_t>(vvert(j))] = 1;
    }
  }
  rebuild_children();
  recompute_all_keys();

  // Safety net against non-termination: between cycle events every tree
  // update strictly lowers the total parameter exponent, which is bounded.
  long long nn = n_;
  pivot_budget_ = (nn + 2) * (4 * nn * nn + 2 * nn + 8) + 64;

  if (opt_.audit) audit_now();
}

bool GkSolver::edge_attrs(const EdgeRef& e, ExtReal* ec, int* em) const {
  *ec = ExtReal(0);
  *em = 0;
  switch (e.kind) {
    case EdgeKind::kRoot:
      return e.src == 0 && is_u(e.dst);
    case EdgeKind::kConst: {
      if (e.src == 0 || e.dst == 0) return false;
      if (is_u(e.src) && is_v(e.dst)) {
        int i = row_of(e.src), j = col_of(e.dst);
        if (w_.at(i, j).is_neg_inf()) return false;
        if (row_mate_[static_cast<size_t>(i)] == j &&
            row_kind_[static_cast<size_t>(i)] == EdgeKind::kConst)
          return false;  // matched: exists only reversed
        *ec = w_.at(i, j);
        return true;
      }
      if (is_v(e.src) && is_u(e.dst)) {
        int j = col_of(e.src), i = row_of(e.dst);
        if (w_.at(i, j).is_neg_inf()) return false;
        if (row_mate_[static_cast<size_t>(i)] != j ||
            row_kind_[static_cast<size_t>(i)] != EdgeKind::kConst)
          return false;
        *ec = -w_.at(i, j);
        return true;
      }
      return false;
    }
    case EdgeKind::kParam: {
      if (e.src == 0 || e.dst == 0) return false;
      if (is_u(e.src) && is_v(e.dst)) {
        int i = row_of(e.src), j = col_of(e.dst);
        if (row_mate_[static_cast<size_t>(i)] == j &&
            row_kind_[static_cast<size_t>(i)] == EdgeKind::kParam)
          return false;
        *em = 1;
        return true;
      }
      if (is_v(e.src) && is_u(e.dst)) {
        int j = col_of(e.src), i = row_of(e.dst);
        if (row_mate_[static_cast<size_t>(i)] != j ||
            row_kind_[static_cast<size_t>(i)] != EdgeKind::kParam)
          return false;
        *em = -1;
        return true;
      }
      return false;
    }
  }
  return false;
}

ExtReal GkSolver::edge_key(const EdgeRef& e) const {
  ExtReal ec;
  int em;
  if (!edge_attrs(e, &ec, &em)) return ExtReal::neg_inf();
  const ExtReal& swc = wc_[static_cast<size_t>(e.src)];
  if (swc.is_neg_inf() || ec.is_neg_inf()) return ExtReal::neg_inf();
  long long denom = wx_[static_cast<size_t>(e.dst)] -
                    (wx_[static_cast<size_t>(e.src)] + em);
  if (denom <= 0) return ExtReal::neg_inf();
  ExtReal num = (swc + ec) - wc_[static_cast<size_t>(e.dst)];
  return num.scaled(Rational(1, denom));
}

bool GkSolver::better_edge(const ExtReal& key, const EdgeRef& e, int q) const {
  const ExtReal& cur = key_[static_cast<size_t>(q)];
  if (key > cur) return true;
  if (key < cur || key.is_neg_inf()) return false;
  int cs = key_src_[static_cast<size_t>(q)];
  int ck = kind_rank(key_kind_[static_cast<size_t>(q)]);
  return e.src < cs || (e.src == cs && kind_rank(e.kind) < ck);
}

void GkSolver::recompute_vertex_key(int q) {
  key_[static_cast<size_t>(q)] = ExtReal::neg_inf();
  key_src_[static_cast<size_t>(q)] = -1;
  auto consider = [&](const EdgeRef& e) {
    ExtReal k = edge_key(e);
    if (k.is_neg_inf()) return;
    if (better_edge(k, e, q)) {
      key_[static_cast<size_t>(q)] = k;
      key_src_[static_cast<size_t>(q)] = e.src;
      key_kind_[static_cast<size_t>(q)] = e.kind;
    }
  };
  if (is_u(q)) {
    int i = row_of(q);
    consider({0, q, EdgeKind::kRoot});
    int j = row_mate_[static_cast<size_t>(i)];
    consider({vvert(j), q, row_kind_[static_cast<size_t>(i)]});
  } else {
    for (int i = 0; i < n_; ++i) {
      consider({uvert(i), q, EdgeKind::kConst});
      consider({uvert(i), q, EdgeKind::kParam});
    }
  }
}

EdgeRef GkSolver::vertex_key_edge(int vertex) const {
  return {key_src_[static_cast<size_t>(vertex)], vertex,
          key_kind_[static_cast<size_t>(vertex)]};
}

bool GkSolver::closes_cycle(int q) const {
  int x = key_src_[static_cast<size_t>(q)];
  while (x >= 0) {
    if (x == q) return true;
    x = parent_[static_cast<size_t>(x)];
  }
  return false;
}

void GkSolver::collect_subtree(int q, std::vector<int>* out) const {
  out->clear();
  out->push_back(q);
  for (size_t head = 0; head < out->size(); ++head) {
    for (int c : children_[static_cast<size_t>((*out)[head])]) out->push_back(c);
  }
}

void GkSolver::reparent(int q, int new_parent, EdgeKind kind) {
  int old = parent_[static_cast<size_t>(q)];
  if (old >= 0) {
    auto& sib = children_[static_cast<size_t>(old)];
    sib.erase(std::find(sib.begin(), sib.end(), q));
  }
  parent_[static_cast<size_t>(q)] = new_parent;
  parent_kind_[static_cast<size_t>(q)] = kind;
  children_[static_cast<size_t>(new_parent)].push_back(q);
}

void GkSolver::apply_tree_update(int q, const ExtReal& b) {
  const EdgeRef e = vertex_key_edge(q);
  ExtReal ec;
  int em;
  if (!edge_attrs(e, &ec, &em))
    throw InvariantError("tree update over an absent edge");

  if (opt_.trace) {
    GkTraceEvent ev;
    ev.kind = GkTraceEvent::Kind::kPivot;
    ev.q = q;
    ev.edge = e;
    ev.key = b;
    trace_.push_back(ev);
  }

  Rational dc = ((wc_[static_cast<size_t>(e.src)] + ec) - wc_[static_cast<size_t>(q)])
                    .rational();
  long long dx = wx_[static_cast<size_t>(e.src)] + em - wx_[static_cast<size_t>(q)];
  reparent(q, e.src, e.kind);

  static thread_local std::vector<int> subtree;
  collect_subtree(q, &subtree);
  for (int s : subtree) {
    mark_[static_cast<size_t>(s)] = 1;
    wc_[static_cast<size_t>(s)] = ExtReal(wc_[static_cast<size_t>(s)].rational() + dc);
    wx_[static_cast<size_t>(s)] += dx;
  }

  for (int s : subtree) recompute_vertex_key(s);

  // Keys of edges leaving the subtree can only rise while x <= b, so a
  // max-update against the stored keys matches a full recomputation.
  auto offer = [&](const EdgeRef& oe) {
    if (mark_[static_cast<size_t>(oe.dst)]) return;
    ExtReal k = edge_key(oe);
    if (k.is_neg_inf()) return;
    if (better_edge(k, oe, oe.dst)) {
      key_[static_cast<size_t>(oe.dst)] = k;
      key_src_[static_cast<size_t>(oe.dst)] = oe.src;
      key_kind_[static_cast<size_t>(oe.dst)] = oe.kind;
    }
  };
  for (int s : subtree) {
    if (is_u(s)) {
      for (int j = 0; j < n_; ++j) {
        offer({s, vvert(j), EdgeKind::kConst});
        offer({s, vvert(j), EdgeKind::kParam});
      }
    } else {
      int i = col_mate_[static_cast<size_t>(col_of(s))];
      if (i >= 0) offer({s, uvert(i), row_kind_[static_cast<size_t>(i)]});
    }
  }
  for (int s : subtree) mark_[static_cast<size_t>(s)] = 0;

  b_ = b;
}

int GkSolver::apply_cycle(int q, const ExtReal& b) {
  const EdgeRef closing = vertex_key_edge(q);

  // Tree path q = c_0 -> c_1 -> ... -> c_m = closing.src, then the closing
  // edge returns to q.
  std::vector<int> chain;
  for (int x = closing.src; x != q; x = parent_[static_cast<size_t>(x)])
    chain.push_back(x);
  chain.push_back(q);
  std::reverse(chain.begin(), chain.end());  // c_0 = q ... c_m = closing.src
  const size_t m = chain.size() - 1;

  std::vector<EdgeRef> cycle;
  std::vector<EdgeKind> old_kind(chain.size());
  for (size_t t = 0; t + 1 < chain.size(); ++t) {
    EdgeKind kk = parent_kind_[static_cast<size_t>(chain[t + 1])];
    old_kind[t + 1] = kk;
    cycle.push_back({chain[t], chain[t + 1], kk});
  }
  cycle.push_back(closing);

  long long em_sum = 0;
  int const_delta = 0;
  std::vector<std::pair<std::pair<int, int>, EdgeKind>> additions;
  for (const EdgeRef& e : cycle) {
    ExtReal ec;
    int em;
    if (!edge_attrs(e, &ec, &em)) throw InvariantError("cycle uses an absent edge");
    em_sum += em;
    if (is_u(e.src)) {
      additions.push_back({{row_of(e.src), col_of(e.dst)}, e.kind});
      if (e.kind == EdgeKind::kConst) ++const_delta;
    } else if (e.kind == EdgeKind::kConst) {
      --const_delta;
    }
  }
  int d = static_cast<int>(-em_sum);
  if (d <= 0)
    throw NonPositiveMultiplicityError(
        "cycle with non-positive multiplicity d=" + std::to_string(d));
  if (d != const_delta)
    throw InvariantError("cycle multiplicity disagrees with matched-edge delta");

  for (const auto& [pair, kk] : additions) {
    auto [i, j] = pair;
    row_mate_[static_cast<size_t>(i)] = j;
    row_kind_[static_cast<size_t>(i)] = kk;
    col_mate_[static_cast<size_t>(j)] = i;
  }
  kcount_ += d;

  // Reverse the cycle inside the tree: the closing edge, now q -> c_m,
  // parents c_m, and each interior path vertex is parented by its old child.
  parent_[static_cast<size_t>(chain[m])] = q;
  parent_kind_[static_cast<size_t>(chain[m])] = closing.kind;
  for (size_t t = 1; t < m; ++t) {
    parent_[static_cast<size_t>(chain[t])] = chain[t + 1];
    parent_kind_[static_cast<size_t>(chain[t])] = old_kind[t + 1];
  }
  rebuild_children();
  recompute_weights();
  recompute_all_keys();

  b_ = b;
  if (!singulars_.empty() && singulars_.back().value == b) {
    singulars_.back().multiplicity += d;
  } else {
    singulars_.push_back({b, d});
  }

  GkReport rep;
  rep.omega = matched_constant_weight();
  rep.matching = matched_constant_pairs();
  reports_[kcount_] = std::move(rep);

  if (opt_.trace) {
    GkTraceEvent ev;
    ev.kind = GkTraceEvent::Kind::kCycle;
    ev.b = b;
    ev.d = d;
    ev.k = kcount_;
    trace_.push_back(ev);
  }
  return d;
}

void GkSolver::rebuild_children() {
  for (auto& c : children_) c.clear();
  for (int x = 1; x < vcount_; ++x) {
    int p = parent_[static_cast<size_t>(x)];
    if (p >= 0) children_[static_cast<size_t>(p)].push_back(x);
  }
}

void GkSolver::recompute_weights() {
  std::vector<int> order;
  order.push_back(0);
  wc_[0] = ExtReal(0);
  wx_[0] = 0;
  for (size_t head = 0; head < order.size(); ++head) {
    int p = order[head];
    for (int c : children_[static_cast<size_t>(p)]) {
      EdgeRef e{p, c, parent_kind_[static_cast<size_t>(c)]};
      ExtReal ec;
      int em;
      if (!edge_attrs(e, &ec, &em)) throw InvariantError("tree edge is absent");
      wc_[static_cast<size_t>(c)] = wc_[static_cast<size_t>(p)] + ec;
      wx_[static_cast<size_t>(c)] = wx_[static_cast<size_t>(p)] + em;
      order.push_back(c);
    }
  }
  for (int x = 1; x < vcount_; ++x) {
    if (parent_[static_cast<size_t>(x)] < 0) {
      wc_[static_cast<size_t>(x)] = ExtReal::neg_inf();
      wx_[static_cast<size_t>(x)] = 0;
    }
  }
}

void GkSolver::recompute_all_keys() {
  for (int x = 1; x < vcount_; ++x) recompute_vertex_key(x);
}

ExtReal GkSolver::matched_constant_weight() const {
  ExtReal sum = 0;
  for (int i = 0; i < n_; ++i)
    if (row_kind_[static_cast<size_t>(i)] == EdgeKind::kConst)
      sum += w_.at(i, row_mate_[static_cast<size_t>(i)]);
  return sum;
}

Matching GkSolver::matched_constant_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n_; ++i)
    if (row_kind_[static_cast<size_t>(i)] == EdgeKind::kConst)
      pairs.emplace_back(i, row_mate_[static_cast<size_t>(i)]);
  return Matching(std::move(pairs));
}

GkSolver::StepResult GkSolver::step() {
  StepResult res;
  if (done()) return res;

  ExtReal best = ExtReal::neg_inf();
  for (int x = 1; x < vcount_; ++x)
    if (key_[static_cast<size_t>(x)] > best) best = key_[static_cast<size_t>(x)];
  if (best.is_neg_inf()) {
    exhausted_ = true;
    return res;
  }

  int update_q = -1, cycle_q = -1;
  for (int x = 1; x < vcount_; ++x) {
    if (key_[static_cast<size_t>(x)] != best) continue;
    if (closes_cycle(x)) {
      if (cycle_q < 0) cycle_q = x;
    } else {
      update_q = x;
      break;
    }
  }

  if (++pivots_ > pivot_budget_)
    throw InvariantError("pivot budget exceeded; sweep is not progressing");

  if (update_q >= 0) {
    res.kind = StepResult::Kind::kTreeUpdate;
    res.q = update_q;
    res.edge = vertex_key_edge(update_q);
    res.key = best;
    apply_tree_update(update_q, best);
  } else {
    res.kind = StepResult::Kind::kCycle;
    res.q = cycle_q;
    res.edge = vertex_key_edge(cycle_q);
    res.key = best;
    res.d = apply_cycle(cycle_q, best);
    res.k = kcount_;
  }

  if (opt_.audit) audit_now();
  return res;
}

void GkSolver::run() {
  while (!done()) {
    StepResult r = step();
    if (r.kind == StepResult::Kind::kExhausted) break;
  }
}

GkResult GkSolver::result() const {
  GkResult out;
  out.n = n_;
  out.b0 = b0_;
  out.reports = reports_;
  out.singular_values = singulars_;
  if (kcount_ < n_) {
    std::vector<SingularValue> tail = out.singular_values;
    tail.push_back({ExtReal::neg_inf(), n_ - kcount_});
    out.singular_values = std::move(tail);
  }
  out.trace = trace_;
  return out;
}

void GkSolver::audit_now() const {
  // Matching state.
  {
    std::vector<int> seen(static_cast<size_t>(n_), -1);
    int consts = 0;
    for (int i = 0; i < n_; ++i) {
      int j = row_mate_[static_cast<size_t>(i)];
      if (j < 0 || j >= n_) throw InvariantError("row without a mate");
      if (seen[static_cast<size_t>(j)] >= 0) throw InvariantError("column matched twice");
      seen[static_cast<size_t>(j)] = i;
      if (col_mate_[static_cast<size_t>(j)] != i)
        throw InvariantError("mate maps disagree");
      if (row_kind_[static_cast<size_t>(i)] == EdgeKind::kConst) {
        ++consts;
        if (w_.at(i, j).is_neg_inf())
          throw InvariantError("constant-matched pair has absent weight");
      }
    }
    if (consts != kcount_) throw InvariantError("matched-constant count is stale");
  }

  // Tree shape and weights.
  {
    GkSolver fresh(*this);
    fresh.recompute_weights();
    for (int x = 0; x < vcount_; ++x) {
      if (fresh.wc_[static_cast<size_t>(x)] != wc_[static_cast<size_t>(x)] ||
          fresh.wx_[static_cast<size_t>(x)] != wx_[static_cast<size_t>(x)])
        throw InvariantError("tree weights are stale at " + vertex_name(n_, x));
    }
    int visited = 0;
    std::vector<int> stack{0};
    std::vector<char> seen(static_cast<size_t>(vcount_), 0);
    seen[0] = 1;
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      ++visited;
      for (int c : children_[static_cast<size_t>(p)]) {
        if (parent_[static_cast<size_t>(c)] != p)
          throw InvariantError("parent/children maps disagree");
        if (seen[static_cast<size_t>(c)]) throw InvariantError("tree has a cycle");
        seen[static_cast<size_t>(c)] = 1;
        stack.push_back(c);
      }
    }
    for (int x = 0; x < vcount_; ++x) {
      if (!seen[static_cast<size_t>(x)] && parent_[static_cast<size_t>(x)] >= 0)
        throw InvariantError("detached vertex has a parent");
    }
    (void)visited;
  }

  // Keys.
  {
    GkSolver fresh(*this);
    fresh.recompute_all_keys();
    for (int x = 1; x < vcount_; ++x) {
      if (fresh.key_[static_cast<size_t>(x)] != key_[static_cast<size_t>(x)])
        throw InvariantError("stored key is stale at " + vertex_name(n_, x));
      if (fresh.key_[static_cast<size_t>(x)].is_finite() &&
          (fresh.key_src_[static_cast<size_t>(x)] != key_src_[static_cast<size_t>(x)] ||
           fresh.key_kind_[static_cast<size_t>(x)] != key_kind_[static_cast<size_t>(x)]))
        throw InvariantError("stored key edge is stale at " + vertex_name(n_, x));
    }
  }

  // Longest-path optimality at the current bound: no present edge may beat
  // the tree value of its head.
  {
    auto value_at_b = [&](const ExtReal& c, long long xcoef) {
      return c + b_.scaled(Rational(xcoef));
    };
    auto check = [&](const EdgeRef& e) {
      ExtReal ec;
      int em;
      if (!edge_attrs(e, &ec, &em)) return;
      ExtReal lhs = value_at_b(wc_[static_cast<size_t>(e.src)] + ec,
                               wx_[static_cast<size_t>(e.src)] + em);
      ExtReal rhs = value_at_b(wc_[static_cast<size_t>(e.dst)],
                               wx_[static_cast<size_t>(e.dst)]);
      if (lhs > rhs)
        throw InvariantError("tree is not optimal at the current bound");
    };
    for (int i = 0; i < n_; ++i) {
      check({0, uvert(i), EdgeKind::kRoot});
      for (int j = 0; j < n_; ++j) {
        check({uvert(i), vvert(j), EdgeKind::kConst});
        check({uvert(i), vvert(j), EdgeKind::kParam});
        check({vvert(j), uvert(i), EdgeKind::kConst});
        check({vvert(j), uvert(i), EdgeKind::kParam});
      }
    }
  }

  // Singular values must be non-increasing with positive multiplicities.
  for (size_t t = 0; t < singulars_.size(); ++t) {
    if (singulars_[t].multiplicity <= 0)
      throw InvariantError("singular value with non-positive multiplicity");
    if (t > 0 && singulars_[t].value > singulars_[t - 1].value)
      throw InvariantError("singular values are not non-increasing");
  }
}

GkResult solve_parametric(const WeightMatrix& w, GkOptions opt) {
  GkSolver solver(w, opt);
  solver.run();
  return solver.result();
}

}  // namespace kassign
