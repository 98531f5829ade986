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

#include "kassign/instance.hpp"

#include <cctype>

namespace kassign {

namespace {

constexpr int kMaxDim = 20000;

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  // Next whitespace-delimited token outside comments, or nullopt at end.
  std::optional<Token> next() {
    for (;;) {
      if (pos_ >= text_.size()) return std::nullopt;
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      Token t;
      t.line = line_;
      t.col = col_;
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             text_[pos_] != '#') {
        t.text += text_[pos_];
        advance();
      }
      return t;
    }
  }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

Token require(Scanner& sc, const char* what) {
  auto t = sc.next();
  if (!t) throw ParseError(sc.line(), sc.col(), std::string("expected ") + what +
                                                    ", found end of input");
  return *t;
}

int parse_dim(const Token& t, const char* what) {
  auto r = Rational::parse(t.text);
  if (!r || !r->is_integer() || r->num() < 1 || r->num() > kMaxDim)
    throw ParseError(t.line, t.col, std::string("invalid ") + what + " '" + t.text +
                                        "' (want an integer in [1, " +
                                        std::to_string(kMaxDim) + "])");
  return static_cast<int>(r->num());
}

}  // namespace

InstanceSpec parse_instance(std::string_view text) {
  Scanner sc(text);
  Token head = require(sc, "objective ('max' or 'min')");
  InstanceSpec spec;
  if (head.text == "max") {
    spec.objective = Objective::kMax;
  } else if (head.text == "min") {
    spec.objective = Objective::kMin;
  } else {
    throw ParseError(head.line, head.col,
                     "unknown objective '" + head.text + "' (want 'max' or 'min')");
  }
  spec.rows = parse_dim(require(sc, "row count"), "row count");
  spec.cols = parse_dim(require(sc, "column count"), "column count");
  spec.cells.resize(static_cast<size_t>(spec.rows) * static_cast<size_t>(spec.cols));

  const bool is_max = spec.objective == Objective::kMax;
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) {
      Token t = require(sc, "weight");
      InstanceSpec::Cell& cell = spec.at(r, c);
      if (t.text == (is_max ? "-inf" : "inf")) {
        cell.infeasible = true;
      } else if (t.text == (is_max ? "inf" : "-inf")) {
        throw ParseError(t.line, t.col, "'" + t.text + "' is not allowed in a " +
                                            (is_max ? "max" : "min") + " instance");
      } else if (auto v = Rational::parse(t.text)) {
        cell.value = *v;
      } else {
        throw ParseError(t.line, t.col, "invalid weight '" + t.text + "'");
      }
    }
  }
  if (auto extra = sc.next())
    throw ParseError(extra->line, extra->col,
                     "unexpected trailing token '" + extra->text + "'");
  return spec;
}

std::string serialize_instance(const InstanceSpec& spec,
                               const std::vector<std::string>& comments) {
  std::string out;
  for (const std::string& c : comments) out += "# " + c + "\n";
  out += spec.objective == Objective::kMax ? "max " : "min ";
  out += std::to_string(spec.rows) + " " + std::to_string(spec.cols) + "\n";
  const char* bad = spec.objective == Objective::kMax ? "-inf" : "inf";
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) {
      if (c > 0) out += ' ';
      const InstanceSpec::Cell& cell = spec.at(r, c);
      out += cell.infeasible ? bad : cell.value.str();
    }
    out += '\n';
  }
  return out;
}

std::pair<WeightMatrix, Transform> normalize(const InstanceSpec& spec) {
  Transform t;
  t.objective = spec.objective;
  t.rows = spec.rows;
  t.cols = spec.cols;
  t.n = std::max(spec.rows, spec.cols);
  WeightMatrix w(t.n);  // padding stays -inf
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) {
      const InstanceSpec::Cell& cell = spec.at(r, c);
      if (cell.infeasible) continue;
      w.at(r, c) = spec.objective == Objective::kMax ? ExtReal(cell.value)
                                                     : ExtReal(-cell.value);
    }
  }
  return {std::move(w), t};
}

InstanceSpec spec_from_matrix(const WeightMatrix& w) {
  InstanceSpec spec;
  spec.objective = Objective::kMax;
  spec.rows = spec.cols = w.size();
  spec.cells.resize(static_cast<size_t>(w.size()) * static_cast<size_t>(w.size()));
  for (int i = 0; i < w.size(); ++i) {
    for (int j = 0; j < w.size(); ++j) {
      const ExtReal& cell = w.at(i, j);
      if (cell.is_neg_inf()) {
        spec.at(i, j).infeasible = true;
      } else {
        spec.at(i, j).value = cell.rational();
      }
    }
  }
  return spec;
}

uint64_t SplitMix64::bounded(uint64_t m) {
  if (m == 0) throw std::invalid_argument("SplitMix64::bounded: empty range");
  uint64_t threshold = (-m) % m;
  for (;;) {
    uint64_t u = next();
    if (u >= threshold) return u % m;
  }
}

WeightMatrix generate_instance(int n, long long lo, long long hi,
                               const Rational& density, uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("generate_instance: size must be positive");
  if (lo > hi) throw std::invalid_argument("generate_instance: empty weight range");
  if (density < Rational(0) || density > Rational(1))
    throw std::invalid_argument("generate_instance: density outside [0, 1]");
  SplitMix64 rng(seed);
  // P(-inf) = floor(density * 2^64) / 2^64, exact to one part in 2^64.
  unsigned __int128 threshold =
      (static_cast<unsigned __int128>(density.num()) << 64) /
      static_cast<unsigned __int128>(density.den());
  const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  WeightMatrix w(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      uint64_t u = rng.next();
      if (static_cast<unsigned __int128>(u) < threshold) continue;
      long long value = lo + static_cast<long long>(rng.bounded(span));
      w.at(i, j) = ExtReal(value);
    }
  }
  return w;
}

}  // namespace kassign
