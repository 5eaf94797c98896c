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

#ifndef RIGIKIT_SCALAR_HPP_
#define RIGIKIT_SCALAR_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace rigikit {

// Canonical arbitrary-precision rational (denominator > 0, reduced).
using Rational = mpq_class;

enum class Mode { kExact, kApprox };

std::string_view ModeName(Mode mode);

// Parses "3", "-7/4", "0.125", "1e-3", "2.5E+2" into an exact rational.
std::optional<Rational> ParseRational(std::string_view text);

// "p" or "p/q".
std::string RationalToString(const Rational& q);

// Correctly rounded conversion (mpq_get_d truncates).
double RationalToDouble(const Rational& q);

// Exact binary value of a finite double.
Rational DoubleToRational(double x);

// Shortest decimal text that round-trips to the same double.
std::string DoubleToString(double x);

// Exact square root of a non-negative rational when both numerator and
// denominator are perfect squares.
std::optional<Rational> ExactSqrt(const Rational& q);

// A number tagged with its arithmetic mode. Arithmetic between different
// modes throws ModeMismatch; conversion goes through ToApprox().
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational q) : value_(std::move(q)) {}  // NOLINT
  Scalar(double x) : value_(x) {}               // NOLINT
  Scalar(int x) : value_(Rational(x)) {}        // NOLINT

  static Scalar Zero(Mode mode) {
    return mode == Mode::kExact ? Scalar(Rational(0)) : Scalar(0.0);
  }
  static Scalar One(Mode mode) {
    return mode == Mode::kExact ? Scalar(Rational(1)) : Scalar(1.0);
  }

  Mode mode() const {
    return std::holds_alternative<Rational>(value_) ? Mode::kExact
                                                    : Mode::kApprox;
  }
  bool is_exact() const { return mode() == Mode::kExact; }

  const Rational& exact() const;
  double approx() const;
  // Double value regardless of mode.
  double to_double() const;
  Scalar ToApprox() const { return Scalar(to_double()); }

  bool is_zero() const;
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Structural equality: same mode and same value.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_ == b.value_;
  }

  std::string ToString() const;

 private:
  std::variant<Rational, double> value_;
};

}  // namespace rigikit

#endif  // RIGIKIT_SCALAR_HPP_
