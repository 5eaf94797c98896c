// Copyright 2026 The rigikit Authors.
//
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

#include "rigikit/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "rigikit/error.hpp"

namespace rigikit {

std::string_view ModeName(Mode mode) {
  return mode == Mode::kExact ? "exact" : "approx";
}

namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

mpz_class Pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Unsigned decimal: digits [. digits] [e [+-] digits]
std::optional<Rational> ParseDecimal(std::string_view s) {
  std::size_t i = 0;
  std::string digits;
  while (i < s.size() && IsDigit(s[i])) digits += s[i++];
  long frac_len = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && IsDigit(s[i])) {
      digits += s[i++];
      ++frac_len;
    }
  }
  if (digits.empty()) return std::nullopt;
  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    std::string exp_digits;
    while (i < s.size() && IsDigit(s[i])) exp_digits += s[i++];
    if (exp_digits.empty() || exp_digits.size() > 6) return std::nullopt;
    exponent = std::stol(exp_digits);
    if (neg) exponent = -exponent;
  }
  if (i != s.size()) return std::nullopt;
  mpz_class mantissa(digits, 10);
  long shift = exponent - frac_len;
  Rational q;
  if (shift >= 0) {
    q = Rational(mantissa * Pow10(static_cast<unsigned long>(shift)));
  } else {
    q = Rational(mantissa, Pow10(static_cast<unsigned long>(-shift)));
  }
  q.canonicalize();
  return q;
}

}  // namespace

std::optional<Rational> ParseRational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::optional<Rational> value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = ParseDecimal(text.substr(0, slash));
    auto den = ParseDecimal(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    value = *num / *den;
  } else {
    value = ParseDecimal(text);
  }
  if (value && negative) *value = -*value;
  return value;
}

std::string RationalToString(const Rational& q) { return q.get_str(10); }

double RationalToDouble(const Rational& q) {
  // Route through a decimal string with enough digits and strtod, which is
  // correctly rounded; the numerator/denominator can exceed double range.
  if (q == 0) return 0.0;
  mpf_class f(q, 256);
  mp_exp_t exp = 0;
  std::string digits = f.get_str(exp, 10, 40);
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(0, 1);
  std::string text = (neg ? "-0." : "0.") + digits + "e" + std::to_string(exp);
  return std::strtod(text.c_str(), nullptr);
}

Rational DoubleToRational(double x) {
  Rational q(x);  // exact for finite doubles
  q.canonicalize();
  return q;
}

std::string DoubleToString(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::optional<Rational> ExactSqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

const Rational& Scalar::exact() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw Error(ErrorCode::kModeMismatch, "scalar is not exact");
}

double Scalar::approx() const {
  if (const auto* x = std::get_if<double>(&value_)) return *x;
  throw Error(ErrorCode::kModeMismatch, "scalar is not approximate");
}

double Scalar::to_double() const {
  if (const auto* x = std::get_if<double>(&value_)) return *x;
  return RationalToDouble(std::get<Rational>(value_));
}

bool Scalar::is_zero() const { return sign() == 0; }

int Scalar::sign() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return sgn(*q);
  double x = std::get<double>(value_);
  return (x > 0) - (x < 0);
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return Scalar(Rational(-*q));
  return Scalar(-std::get<double>(value_));
}

namespace {

void CheckSameMode(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) {
    throw Error(ErrorCode::kModeMismatch,
                "arithmetic between exact and approximate scalars");
  }
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& other) {
  CheckSameMode(*this, other);
  if (is_exact()) {
    std::get<Rational>(value_) += other.exact();
  } else {
    std::get<double>(value_) += other.approx();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  CheckSameMode(*this, other);
  if (is_exact()) {
    std::get<Rational>(value_) -= other.exact();
  } else {
    std::get<double>(value_) -= other.approx();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  CheckSameMode(*this, other);
  if (is_exact()) {
    std::get<Rational>(value_) *= other.exact();
  } else {
    std::get<double>(value_) *= other.approx();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  CheckSameMode(*this, other);
  if (other.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  if (is_exact()) {
    std::get<Rational>(value_) /= other.exact();
  } else {
    std::get<double>(value_) /= other.approx();
  }
  return *this;
}

std::string Scalar::ToString() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return RationalToString(*q);
  return DoubleToString(std::get<double>(value_));
}

}  // namespace rigikit
