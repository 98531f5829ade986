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

#ifndef KASSIGN_INSTANCE_HPP_
#define KASSIGN_INSTANCE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kassign/matrix.hpp"

namespace kassign {

enum class Objective { kMax, kMin };

// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& reason)
      : std::runtime_error("parse error at line " + std::to_string(line) +
                           ", column " + std::to_string(col) + ": " + reason),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// A possibly rectangular instance as written in a file.  Cells are exact
// rationals; `infeasible` marks the objective's bad value (-inf for max
// instances, inf for min instances).
struct InstanceSpec {
  Objective objective = Objective::kMax;
  int rows = 0;
  int cols = 0;

  struct Cell {
    bool infeasible = false;
    Rational value{};
  };
  std::vector<Cell> cells;  // row-major, rows*cols entries

  const Cell& at(int r, int c) const {
    return cells[static_cast<size_t>(r) * static_cast<size_t>(cols) +
                 static_cast<size_t>(c)];
  }
  Cell& at(int r, int c) {
    return cells[static_cast<size_t>(r) * static_cast<size_t>(cols) +
                 static_cast<size_t>(c)];
  }
};

// How a normalized square max-plus matrix maps back to the source instance.
// Minimization negates values, so internal -inf renders as "inf" there; padding
// rows or columns (index >= rows or >= cols) are absent edges.
struct Transform {
  Objective objective = Objective::kMax;
  int rows = 0;
  int cols = 0;
  int n = 0;

  bool is_padding(int r, int c) const { return r >= rows || c >= cols; }

  // Objective-domain rendering of an internal value.
  std::string display_value(const ExtReal& internal) const {
    if (objective == Objective::kMax) return internal.str();
    return internal.is_neg_inf() ? "inf" : (-internal).str();
  }

  double display_double(const ExtReal& internal) const {
    if (objective == Objective::kMax) return internal.to_double();
    return -internal.to_double();
  }
};

// Instance file format:
//   - '#' starts a comment running to end of line; blank lines are ignored
//   - header token triple: ("max" | "min") <rows> <cols>
//   - rows*cols weight tokens in row-major order: decimal or p/q rationals,
//     "-inf" (max instances only) or "inf" (min instances only)
InstanceSpec parse_instance(std::string_view text);

// Inverse of parse_instance, with optional leading comment lines (written
// verbatim after "# ").
std::string serialize_instance(const InstanceSpec& spec,
                               const std::vector<std::string>& comments = {});

// Embeds the instance into a square max-plus matrix of side max(rows, cols):
// min instances are negated, infeasible cells and padding become -inf.
std::pair<WeightMatrix, Transform> normalize(const InstanceSpec& spec);

// A square max instance wrapping the given matrix, for serialization.
InstanceSpec spec_from_matrix(const WeightMatrix& w);

// Deterministic generator state: splitmix64.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform draw in [0, m) by rejection, bias-free.
  uint64_t bounded(uint64_t m);

  static constexpr const char* kName = "splitmix64";

 private:
  uint64_t state_;
};

// Random square max instance: each cell is -inf with probability `density`
// (drawn first), otherwise a uniform integer in [lo, hi].  Cells are filled
// in row-major order, one or two generator draws per cell, so outputs are
// reproducible from (n, lo, hi, density, seed) alone.
WeightMatrix generate_instance(int n, long long lo, long long hi,
                               const Rational& density, uint64_t seed);

}  // namespace kassign

#endif  // KASSIGN_INSTANCE_HPP_
