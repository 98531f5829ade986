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

#ifndef KASSIGN_EXTREAL_HPP_
#define KASSIGN_EXTREAL_HPP_

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kassign/rational.hpp"

namespace kassign {

// Scalar of the max-plus semifield: an exact rational or -inf.
// -inf is absorbing for addition and neutral for max.  Subtraction follows
// the convention (-inf) - x = -inf for every x, including x = -inf; the
// remaining case (finite) - (-inf) has no value and throws.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  constexpr ExtReal(long long value) : value_(value) {}  // NOLINT(runtime/explicit)
  ExtReal(const Rational& value) : value_(value) {}      // NOLINT(runtime/explicit)

  static ExtReal neg_inf() {
    ExtReal e;
    e.finite_ = false;
    return e;
  }

  bool is_finite() const { return finite_; }
  bool is_neg_inf() const { return !finite_; }

  const Rational& rational() const {
    if (!finite_) throw std::logic_error("ExtReal: -inf has no rational value");
    return value_;
  }

  friend ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (!a.finite_ || !b.finite_) return neg_inf();
    return ExtReal(a.value_ + b.value_);
  }
  friend ExtReal operator-(const ExtReal& a, const ExtReal& b) {
    if (!a.finite_) return neg_inf();
    if (!b.finite_) throw std::logic_error("ExtReal: finite minus -inf is undefined");
    return ExtReal(a.value_ - b.value_);
  }
  ExtReal operator-() const {
    if (!finite_) throw std::logic_error("ExtReal: negation of -inf is undefined");
    return ExtReal(-value_);
  }
  ExtReal& operator+=(const ExtReal& b) { return *this = *this + b; }

  friend ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

  // Scaling by an ordinary integer or rational factor, used for powers and
  // exact interpolation.  -inf stays -inf.
  ExtReal scaled(const Rational& factor) const {
    if (!finite_) return neg_inf();
    return ExtReal(value_ * factor);
  }
  ExtReal half() const { return scaled(Rational(1, 2)); }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
    if (!a.finite_) return std::strong_ordering::less;
    if (!b.finite_) return std::strong_ordering::greater;
    return a.value_ <=> b.value_;
  }

  double to_double() const {
    return finite_ ? value_.to_double() : -std::numeric_limits<double>::infinity();
  }

  std::string str() const { return finite_ ? value_.str() : "-inf"; }

  // Accepts "-inf" plus everything Rational::parse accepts.
  static std::optional<ExtReal> parse(std::string_view text) {
    if (text == "-inf") return neg_inf();
    if (auto r = Rational::parse(text)) return ExtReal(*r);
    return std::nullopt;
  }

 private:
  Rational value_{};
  bool finite_ = true;
};

}  // namespace kassign

#endif  // KASSIGN_EXTREAL_HPP_
