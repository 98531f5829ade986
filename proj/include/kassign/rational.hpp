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

#ifndef KASSIGN_RATIONAL_HPP_
#define KASSIGN_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kassign {

// Exact rational number p/q with q > 0, always stored reduced.
// Intermediate products go through 128-bit arithmetic; if a reduced result
// no longer fits in 64 bits the operation throws std::overflow_error rather
// than silently losing exactness.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value) {}  // NOLINT(runtime/explicit)
  Rational(long long num, long long den) { *this = make(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "p" for integers, "p/q" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  // Accepts "p", "p/q", and decimal forms like "-3.25".
  static std::optional<Rational> parse(std::string_view text);

 private:
  using i128 = __int128;

  static Rational make(long long num, long long den) {
    return make128(i128(num), i128(den));
  }

  static Rational make128(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 lo = std::numeric_limits<long long>::min();
    constexpr i128 hi = std::numeric_limits<long long>::max();
    if (num < lo || num > hi || den > hi)
      throw std::overflow_error("Rational: value exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') {
    neg = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](long long& out, int& count) -> bool {
    out = 0;
    count = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (out > (std::numeric_limits<long long>::max() - 9) / 10) return false;
      out = out * 10 + (text[pos] - '0');
      ++pos;
      ++count;
    }
    return true;
  };
  long long whole = 0;
  int nwhole = 0;
  if (!digits(whole, nwhole)) return std::nullopt;
  long long num = whole, den = 1;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    long long frac = 0;
    int nfrac = 0;
    if (!digits(frac, nfrac)) return std::nullopt;
    if (nwhole == 0 && nfrac == 0) return std::nullopt;
    if (nfrac > 18) return std::nullopt;
    for (int i = 0; i < nfrac; ++i) den *= 10;
    __int128 wide = static_cast<__int128>(whole) * den + frac;
    if (wide > std::numeric_limits<long long>::max()) return std::nullopt;
    num = static_cast<long long>(wide);
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    long long q = 0;
    int nq = 0;
    if (!digits(q, nq)) return std::nullopt;
    if (nwhole == 0 || nq == 0 || q == 0) return std::nullopt;
    den = q;
  } else if (nwhole == 0) {
    return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;
  try {
    Rational r(neg ? -num : num, den);
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace kassign

#endif  // KASSIGN_RATIONAL_HPP_
