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

#include "kassign/maxpoly.hpp"

#include <algorithm>
#include <cstddef>

namespace kassign {

std::string to_string(TermClass c) {
  switch (c) {
    case TermClass::kEssential: return "essential";
    case TermClass::kSemiEssential: return "semi-essential";
    case TermClass::kInessential: return "inessential";
  }
  return "?";
}

MaxPolynomial::MaxPolynomial(std::vector<ExtReal> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("MaxPolynomial: empty coefficient list");
}

MaxPolynomial MaxPolynomial::from_descending(std::vector<ExtReal> coeffs) {
  std::reverse(coeffs.begin(), coeffs.end());
  return MaxPolynomial(std::move(coeffs));
}

std::vector<ExtReal> MaxPolynomial::descending() const {
  std::vector<ExtReal> out(coeffs_.rbegin(), coeffs_.rend());
  return out;
}

bool MaxPolynomial::all_neg_inf() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const ExtReal& c) { return c.is_neg_inf(); });
}

ExtReal MaxPolynomial::eval(const ExtReal& x) const {
  if (x.is_neg_inf()) return coeffs_[0];
  ExtReal best = ExtReal::neg_inf();
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    best = max(best, coeffs_[k] + x.scaled(Rational(static_cast<long long>(k))));
  }
  return best;
}

namespace {

// Indices of the first and last finite coefficients, or {-1, -1}.
std::pair<int, int> finite_span(const std::vector<ExtReal>& c) {
  int lo = -1, hi = -1;
  for (int k = 0; k < static_cast<int>(c.size()); ++k) {
    if (c[static_cast<size_t>(k)].is_finite()) {
      if (lo < 0) lo = k;
      hi = k;
    }
  }
  return {lo, hi};
}

// Orientation of the middle point against the chord; >= 0 means p2 lies on
// or below the segment p1-p3 and is redundant for the upper hull.
bool pop_middle(int x1, const Rational& y1, int x2, const Rational& y2, int x3,
                const Rational& y3) {
  Rational cross = Rational(x2 - x1) * (y3 - y2) - (y2 - y1) * Rational(x3 - x2);
  return cross >= Rational(0);
}

}  // namespace

MaxPolynomial MaxPolynomial::canonicalized() const {
  auto [lo, hi] = finite_span(coeffs_);
  if (lo < 0 || lo == hi) return *this;

  // Upper concave hull of the finite points (k, a_k).
  std::vector<int> hull;
  for (int k = lo; k <= hi; ++k) {
    const ExtReal& c = coeffs_[static_cast<size_t>(k)];
    if (!c.is_finite()) continue;
    while (hull.size() >= 2) {
      int x1 = hull[hull.size() - 2], x2 = hull[hull.size() - 1];
      if (pop_middle(x1, coeffs_[static_cast<size_t>(x1)].rational(), x2,
                     coeffs_[static_cast<size_t>(x2)].rational(), k, c.rational())) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }

  std::vector<ExtReal> out = coeffs_;
  size_t seg = 0;
  for (int k = lo; k <= hi; ++k) {
    while (seg + 1 < hull.size() && hull[seg + 1] < k) ++seg;
    int x1 = hull[seg], x2 = hull[seg + 1 < hull.size() ? seg + 1 : seg];
    if (k == x1) {
      continue;  // hull vertices keep their own coefficient
    }
    const Rational& y1 = coeffs_[static_cast<size_t>(x1)].rational();
    const Rational& y2 = coeffs_[static_cast<size_t>(x2)].rational();
    Rational t = Rational(k - x1) / Rational(x2 - x1);
    out[static_cast<size_t>(k)] = ExtReal(y1 + (y2 - y1) * t);
  }
  return MaxPolynomial(std::move(out));
}

bool MaxPolynomial::is_full_canonical() const {
  auto [lo, hi] = finite_span(coeffs_);
  if (lo < 0) return true;
  for (int k = lo; k <= hi; ++k) {
    if (!coeffs_[static_cast<size_t>(k)].is_finite()) return false;
  }
  for (int k = lo + 1; k < hi; ++k) {
    const ExtReal mid = (coeffs_[static_cast<size_t>(k - 1)] +
                         coeffs_[static_cast<size_t>(k + 1)]).half();
    if (coeffs_[static_cast<size_t>(k)] < mid) return false;
  }
  return true;
}

RootList MaxPolynomial::roots() const {
  MaxPolynomial canon = canonicalized();
  auto [lo, hi] = finite_span(canon.coeffs_);
  if (lo < 0) throw AllNegInfError();
  // Powers above hi are absent; the effective degree is hi.
  RootList out;
  for (int k = 1; k <= hi; ++k) {
    // a_{k-1} - a_k; for k <= lo both conventions give -inf.
    ExtReal r = canon.coeffs_[static_cast<size_t>(k - 1)] -
                canon.coeffs_[static_cast<size_t>(k)];
    if (!out.empty() && out.back().value == r) {
      ++out.back().multiplicity;
    } else {
      out.push_back({r, 1});
    }
  }
  return out;
}

TermClass MaxPolynomial::classify_term(int k) const {
  const ExtReal& c = coeff(k);
  if (c.is_neg_inf()) return TermClass::kInessential;
  MaxPolynomial canon = canonicalized();
  if (c < canon.coeffs_[static_cast<size_t>(k)]) return TermClass::kInessential;
  auto [lo, hi] = finite_span(canon.coeffs_);
  if (k == lo || k == hi) return TermClass::kEssential;
  const ExtReal mid = (canon.coeffs_[static_cast<size_t>(k - 1)] +
                       canon.coeffs_[static_cast<size_t>(k + 1)]).half();
  return canon.coeffs_[static_cast<size_t>(k)] > mid ? TermClass::kEssential
                                                     : TermClass::kSemiEssential;
}

std::vector<TermClass> MaxPolynomial::term_classes() const {
  std::vector<TermClass> out;
  out.reserve(coeffs_.size());
  for (int k = 0; k <= degree(); ++k) out.push_back(classify_term(k));
  return out;
}

std::string MaxPolynomial::text() const {
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const ExtReal& c = coeffs_[static_cast<size_t>(k)];
    if (c.is_neg_inf()) continue;
    if (!s.empty()) s += " (+) ";
    const bool unit = c.is_finite() && c.rational() == Rational(0) && k > 0;
    if (!unit) s += c.str();
    if (k > 0) {
      s += 'x';
      if (k > 1) {
        s += '^';
        s += std::to_string(k);
      }
    }
  }
  return s.empty() ? "-inf" : s;
}

}  // namespace kassign
