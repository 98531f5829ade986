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

#ifndef KASSIGN_PARAMETRIC_HPP_
#define KASSIGN_PARAMETRIC_HPP_

#include <map>
#include <string>
#include <vector>

#include "kassign/sequence.hpp"

namespace kassign {

// Internal consistency failure detected by a debug audit.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

// A cycle event must raise the matched-constant count.
class NonPositiveMultiplicityError : public std::logic_error {
 public:
  explicit NonPositiveMultiplicityError(const std::string& what)
      : std::logic_error(what) {}
};

// Max-plus singular values share the root representation: a value with a
// positive multiplicity.
using SingularValue = RootEntry;

enum class EdgeKind { kRoot, kConst, kParam };

// One oriented edge of the parametric residual graph.  Vertices are indexed
// r = 0, u_i = 1..n, v_j = n+1..2n.  Matched edges appear reversed (v to u)
// with negated constant weight or parameter exponent.
struct EdgeRef {
  int src = -1;
  int dst = -1;
  EdgeKind kind = EdgeKind::kRoot;

  friend bool operator==(const EdgeRef& a, const EdgeRef& b) {
    return a.src == b.src && a.dst == b.dst && a.kind == b.kind;
  }
};

struct GkTraceEvent {
  enum class Kind { kPivot, kCycle };
  Kind kind = Kind::kPivot;
  int q = -1;        // pivoted vertex (tree updates)
  EdgeRef edge;      // pivot edge (tree updates)
  ExtReal key;       // pivot key (tree updates)
  ExtReal b;         // cycle bound
  int d = 0;         // cycle multiplicity
  int k = 0;         // matched-constant count after the cycle

  std::string str(int n) const;
};

struct GkReport {
  ExtReal omega = ExtReal::neg_inf();
  Matching matching;
};

struct GkResult {
  int n = 0;
  ExtReal b0;
  // Cardinalities the sweep visits directly; the gaps in between are
  // recoverable by fill-in.
  std::map<int, GkReport> reports;
  // Non-increasing, multiplicities summing to n; a trailing -inf entry
  // covers the infeasible cardinalities.
  std::vector<SingularValue> singular_values;
  std::vector<GkTraceEvent> trace;

  // omega_k as the sum of the k largest singular values, k = 0..n.
  std::vector<ExtReal> omegas() const;
  MaxPolynomial fullchar() const;
  // Sequence view without fill-in: witnesses only at visited cardinalities.
  AssignmentSequence sequence() const;
};

struct GkOptions {
  bool trace = false;  // record pivot and cycle events
  bool audit = false;  // re-derive all state after every step and compare
};

// Parametric sweep over the assignment problem with weights w_ij (+) x.
// A longest-path tree rooted at r is maintained while x decreases from
// above every finite weight; each pivot either re-roots a subtree or closes
// an alternating cycle whose reversal trades parametric for constant edges.
// Cycle events at parameter value b with multiplicity d emit the singular
// value (b, d) and report the new assignment.
//
// Deterministic pivot rule: take the maximum vertex key, preferring pivots
// that do not close a cycle, breaking remaining ties by lowest vertex index
// and then lowest edge source; a cycle is closed only when every maximal
// pivot closes one.
class GkSolver {
 public:
  explicit GkSolver(const WeightMatrix& w, GkOptions opt = {});

  int size() const { return n_; }
  const ExtReal& initial_bound() const { return b0_; }
  const ExtReal& bound() const { return b_; }
  int matched_constant_count() const { return kcount_; }
  bool done() const { return exhausted_ || kcount_ == n_; }

  // Stored key of a vertex and the edge realizing it.
  ExtReal vertex_key(int vertex) const { return key_[static_cast<size_t>(vertex)]; }
  EdgeRef vertex_key_edge(int vertex) const;

  // Key of one oriented edge against the current tree: the parameter value
  // where the path through the edge ties the tree path, -inf when the edge
  // is absent or never overtakes (denominator <= 0).
  ExtReal edge_key(const EdgeRef& e) const;

  struct StepResult {
    enum class Kind { kExhausted, kTreeUpdate, kCycle };
    Kind kind = Kind::kExhausted;
    int q = -1;
    EdgeRef edge;
    ExtReal key;
    int d = 0;  // cycle only
    int k = 0;  // cycle only
  };

  // One pivot; cycle events are applied immediately.
  StepResult step();

  void run();

  // Snapshot of the results accumulated so far; complete after run().
  GkResult result() const;

  // Throws InvariantError if any derived state disagrees with a from-scratch
  // recomputation or the tree fails optimality at the current bound.
  void audit_now() const;

  static std::string vertex_name(int n, int vertex);

 private:
  bool is_u(int x) const { return x >= 1 && x <= n_; }
  bool is_v(int x) const { return x > n_; }
  int uvert(int i) const { return 1 + i; }
  int vvert(int j) const { return 1 + n_ + j; }
  int row_of(int x) const { return x - 1; }
  int col_of(int x) const { return x - 1 - n_; }

  // Weight (ec, em) of an oriented edge; false when the edge is not present
  // in the current residual orientation.
  bool edge_attrs(const EdgeRef& e, ExtReal* ec, int* em) const;

  void recompute_vertex_key(int q);
  bool better_edge(const ExtReal& key, const EdgeRef& e, int q) const;
  bool closes_cycle(int q) const;
  void collect_subtree(int q, std::vector<int>* out) const;
  void reparent(int q, int new_parent, EdgeKind kind);
  void apply_tree_update(int q, const ExtReal& b);
  int apply_cycle(int q, const ExtReal& b);  // returns the multiplicity d
  void rebuild_children();
  void recompute_weights();
  void recompute_all_keys();
  ExtReal matched_constant_weight() const;
  Matching matched_constant_pairs() const;

  int n_;
  GkOptions opt_;
  WeightMatrix w_;
  int vcount_;

  ExtReal b0_;
  ExtReal b_;

  std::vector<int> parent_;
  std::vector<EdgeKind> parent_kind_;
  std::vector<std::vector<int>> children_;
  std::vector<ExtReal> wc_;
  std::vector<long long> wx_;
  std::vector<ExtReal> key_;
  std::vector<int> key_src_;
  std::vector<EdgeKind> key_kind_;

  std::vector<int> row_mate_;
  std::vector<EdgeKind> row_kind_;
  std::vector<int> col_mate_;
  int kcount_ = 0;

  bool exhausted_ = false;
  long long pivots_ = 0;
  long long pivot_budget_ = 0;

  std::vector<SingularValue> singulars_;
  std::map<int, GkReport> reports_;
  std::vector<GkTraceEvent> trace_;

  mutable std::vector<char> mark_;  // scratch for subtree collection
};

GkResult solve_parametric(const WeightMatrix& w, GkOptions opt = {});

}  // namespace kassign

#endif  // KASSIGN_PARAMETRIC_HPP_
