// Copyright 2026 The wsdprop Authors
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

#ifndef WSDPROP_RATIONAL_H_
#define WSDPROP_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace wsdprop {

// Exact rational number over arbitrary-precision integers. Always kept in
// lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT: implicit integer promotion is intended
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p/q", "p", with optional leading sign. Throws std::invalid_argument
  // on malformed text or a zero denominator.
  static Rational Parse(std::string_view text);

  // "p/q", or "p" when the denominator is 1.
  std::string ToString() const;
  // Approximate decimal rendering, for human consumption only.
  std::string ToDecimal(int digits = 6) const;
  double ToDouble() const { return value_.get_d(); }

  std::string Numerator() const { return value_.get_num().get_str(); }
  std::string Denominator() const { return value_.get_den().get_str(); }

  // Floor/ceiling as machine integers. Throws std::overflow_error when the
  // result does not fit.
  std::int64_t Floor() const;
  std::int64_t Ceil() const;

  int Sign() const { return sgn(value_); }
  bool IsZero() const { return Sign() == 0; }
  bool IsInteger() const { return value_.get_den() == 1; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_{0};
};

Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);

}  // namespace wsdprop

#endif  // WSDPROP_RATIONAL_H_
