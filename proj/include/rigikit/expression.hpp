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

#ifndef RIGIKIT_EXPRESSION_HPP_
#define RIGIKIT_EXPRESSION_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigikit/scalar.hpp"

namespace rigikit {

// Abstract syntax tree for coordinate and parametrization strings.
//
// Grammar (whitespace ignored):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)*
//   exponent:= '-'? primary
//   primary := number | 't' | func '(' expr ')' | '(' expr ')'
//   func    := 'sqrt' | 'sin' | 'cos'
// Precedence: ^ binds tighter than unary minus, which binds tighter than
// * and /; all binary operators are left-associative.
class Expression {
 public:
  enum class Kind { kLiteral, kParameter, kNegate, kAdd, kSub, kMul, kDiv, kPow,
                    kSqrt, kSin, kCos };

  struct Node {
    Kind kind;
    std::string text;  // literal source text
    Rational value;    // literal value
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  Expression() = default;
  explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  static Expression Literal(const Rational& q);
  static Expression Parameter();
  static Expression Unary(Kind kind, const Expression& arg);
  static Expression Binary(Kind kind, const Expression& lhs, const Expression& rhs);

  const Node& root() const { return *root_; }
  bool empty() const { return root_ == nullptr; }

  // True when the tree only uses +, -, *, / and ^ (no sqrt/sin/cos).
  bool IsRationalClosed() const;
  bool UsesParameter() const;

  // Canonical text with minimal parentheses; parsing it yields an equal tree.
  std::string ToString() const;

  friend bool operator==(const Expression& a, const Expression& b);

 private:
  std::shared_ptr<const Node> root_;
};

// Throws Error(SyntaxError) with the byte position and expected token, or
// Error(UnknownSymbol) for identifiers other than t/sqrt/sin/cos.
Expression ParseExpression(std::string_view src);

// Evaluates at parameter value t. Exact mode needs a rational t and a tree
// whose irrational functions reduce exactly (sqrt of a perfect square,
// sin/cos of zero); otherwise ExactUnsupported.
Scalar Evaluate(const Expression& e, const Scalar& t, Mode mode);
Scalar Evaluate(const Expression& e, Mode mode);

// Dense univariate polynomial in t with rational coefficients; coefficient i
// multiplies t^i. Trailing zeros are trimmed so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial Constant(const Rational& c);
  static Polynomial T();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational operator()(const Rational& t) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void Trim();
  std::vector<Rational> coeffs_;
};

// numerator / denominator, denominator never the zero polynomial.
struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator = Polynomial::Constant(1);

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  // Identity test a ≡ b by cross multiplication.
  bool IdenticallyEquals(const RationalFunction& other) const;
};

// Normal form of a rational-closed expression; nullopt when the tree uses
// sqrt/sin/cos or a non-constant exponent. Division by the zero polynomial
// throws DivisionByZero.
std::optional<RationalFunction> ToRationalFunction(const Expression& e);

}  // namespace rigikit

#endif  // RIGIKIT_EXPRESSION_HPP_
