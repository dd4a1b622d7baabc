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

#include "wsdprop/rational.h"

#include <cctype>
#include <stdexcept>

namespace wsdprop {
namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::int64_t ToInt64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer out of range");
  return z.get_si();
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                     mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!IsDigits(num) || !IsDigits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::ToString() const { return value_.get_str(); }

std::string Rational::ToDecimal(int digits) const {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpz_class num = value_.get_num() * scale;
  mpz_class q;
  mpz_class den = value_.get_den();
  // Round half away from zero.
  mpz_class twice = 2 * num;
  if (num >= 0) {
    q = (twice + den) / (2 * den);
  } else {
    q = -((-twice + den) / (2 * den));
  }
  const bool neg = q < 0;
  if (neg) q = -q;
  std::string s = q.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) {
      s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return neg ? "-" + s : s;
}

std::int64_t Rational::Floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return ToInt64(r);
}

std::int64_t Rational::Ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return ToInt64(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.IsZero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational Max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace wsdprop
