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

#include "rigikit/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "rigikit/error.hpp"

namespace rigikit {

using Kind = Expression::Kind;
using NodePtr = std::shared_ptr<const Expression::Node>;

Expression Expression::Literal(const Rational& q) {
  auto lit = [](const mpz_class& z) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kLiteral;
    node->text = z.get_str(10);
    node->value = Rational(z);
    return Expression(node);
  };
  mpz_class num = abs(q.get_num());
  Expression e = q.get_den() == 1 ? lit(num) : Binary(Kind::kDiv, lit(num), lit(q.get_den()));
  return q < 0 ? Unary(Kind::kNegate, e) : e;
}

Expression Expression::Parameter() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kParameter;
  return Expression(node);
}

Expression Expression::Unary(Kind kind, const Expression& arg) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->lhs = arg.root_;
  return Expression(node);
}

Expression Expression::Binary(Kind kind, const Expression& lhs, const Expression& rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->lhs = lhs.root_;
  node->rhs = rhs.root_;
  return Expression(node);
}

namespace {

bool AnyNode(const Expression::Node& n, Kind a, Kind b, Kind c) {
  if (n.kind == a || n.kind == b || n.kind == c) return true;
  if (n.lhs && AnyNode(*n.lhs, a, b, c)) return true;
  return n.rhs && AnyNode(*n.rhs, a, b, c);
}

bool NodesEqual(const Expression::Node& a, const Expression::Node& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Kind::kLiteral) return a.value == b.value;
  if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
  if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
  if (a.lhs && !NodesEqual(*a.lhs, *b.lhs)) return false;
  return !a.rhs || NodesEqual(*a.rhs, *b.rhs);
}

int Precedence(Kind kind) {
  switch (kind) {
    case Kind::kAdd:
    case Kind::kSub: return 1;
    case Kind::kMul:
    case Kind::kDiv: return 2;
    case Kind::kNegate: return 3;
    case Kind::kPow: return 4;
    default: return 5;
  }
}

std::string Render(const Expression::Node& n);

std::string Wrap(const Expression::Node& n, bool parens) {
  return parens ? "(" + Render(n) + ")" : Render(n);
}

std::string Render(const Expression::Node& n) {
  switch (n.kind) {
    case Kind::kLiteral: return n.text;
    case Kind::kParameter: return "t";
    case Kind::kSqrt: return "sqrt(" + Render(*n.lhs) + ")";
    case Kind::kSin: return "sin(" + Render(*n.lhs) + ")";
    case Kind::kCos: return "cos(" + Render(*n.lhs) + ")";
    case Kind::kNegate: return "-" + Wrap(*n.lhs, Precedence(n.lhs->kind) < 3);
    case Kind::kPow: {
      const auto& ex = *n.rhs;
      bool plain = Precedence(ex.kind) == 5 ||
                   (ex.kind == Kind::kNegate && Precedence(ex.lhs->kind) == 5);
      return Wrap(*n.lhs, Precedence(n.lhs->kind) < 4) + "^" + Wrap(ex, !plain);
    }
    default: {
      int p = Precedence(n.kind);
      const char* op = n.kind == Kind::kAdd ? "+" : n.kind == Kind::kSub ? "-"
                       : n.kind == Kind::kMul ? "*" : "/";
      return Wrap(*n.lhs, Precedence(n.lhs->kind) < p) + op +
             Wrap(*n.rhs, Precedence(n.rhs->kind) <= p);
    }
  }
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expression Parse() {
    SkipSpace();
    if (pos_ >= src_.size()) Fail("expression");
    Expression e = ParseSum();
    SkipSpace();
    if (pos_ != src_.size()) Fail("end of input");
    return e;
  }

 private:
  [[noreturn]] void Fail(const std::string& expected) {
    throw Error(ErrorCode::kSyntaxError,
                "syntax error at position " + std::to_string(pos_) + ": expected " + expected,
                "position=" + std::to_string(pos_) + ";expected=" + expected);
  }

  void SkipSpace() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool Accept(char c) {
    SkipSpace();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void Expect(char c) {
    if (!Accept(c)) Fail(std::string("'") + c + "'");
  }

  Expression ParseSum() {
    Expression lhs = ParseProduct();
    for (;;) {
      if (Accept('+')) {
        lhs = Expression::Binary(Kind::kAdd, lhs, ParseProduct());
      } else if (Accept('-')) {
        lhs = Expression::Binary(Kind::kSub, lhs, ParseProduct());
      } else {
        return lhs;
      }
    }
  }

  Expression ParseProduct() {
    Expression lhs = ParseUnary();
    for (;;) {
      if (Accept('*')) {
        lhs = Expression::Binary(Kind::kMul, lhs, ParseUnary());
      } else if (Accept('/')) {
        std::size_t at = pos_;
        Expression rhs = ParseUnary();
        if (rhs.root().kind == Kind::kLiteral && rhs.root().value == 0) {
          throw Error(ErrorCode::kDivisionByZero,
                      "literal zero denominator at position " + std::to_string(at));
        }
        lhs = Expression::Binary(Kind::kDiv, lhs, rhs);
      } else {
        return lhs;
      }
    }
  }

  Expression ParseUnary() {
    if (Accept('-')) return Expression::Unary(Kind::kNegate, ParseUnary());
    return ParsePower();
  }

  Expression ParsePower() {
    Expression base = ParsePrimary();
    while (Accept('^')) {
      Expression exponent = Accept('-')
                                ? Expression::Unary(Kind::kNegate, ParsePrimary())
                                : ParsePrimary();
      base = Expression::Binary(Kind::kPow, base, exponent);
    }
    return base;
  }

  Expression ParsePrimary() {
    SkipSpace();
    if (pos_ >= src_.size()) Fail("number, 't', function or '('");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expression inner = ParseSum();
      Expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return ParseNumber();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(src_.substr(start, pos_ - start));
      if (name == "t") return Expression::Parameter();
      Kind fn;
      if (name == "sqrt") {
        fn = Kind::kSqrt;
      } else if (name == "sin") {
        fn = Kind::kSin;
      } else if (name == "cos") {
        fn = Kind::kCos;
      } else {
        throw Error(ErrorCode::kUnknownSymbol, "unknown symbol '" + name + "'",
                    "position=" + std::to_string(start) + ";symbol=" + name);
      }
      Expect('(');
      Expression arg = ParseSum();
      Expect(')');
      return Expression::Unary(fn, arg);
    }
    Fail("number, 't', function or '('");
  }

  Expression ParseNumber() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      std::size_t exp_start = pos_;
      digits();
      if (pos_ == exp_start) pos_ = save;
    }
    std::string text(src_.substr(start, pos_ - start));
    auto value = ParseRational(text);
    if (!value) {
      pos_ = start;
      Fail("number");
    }
    auto node = std::make_shared<Expression::Node>();
    node->kind = Kind::kLiteral;
    node->text = text;
    node->value = *value;
    return Expression(node);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

Scalar EvalNode(const Expression::Node& n, const Scalar& t, Mode mode) {
  switch (n.kind) {
    case Kind::kLiteral:
      if (mode == Mode::kExact) return Scalar(n.value);
      return Scalar(std::strtod(n.text.c_str(), nullptr));
    case Kind::kParameter:
      return t;
    case Kind::kNegate:
      return -EvalNode(*n.lhs, t, mode);
    case Kind::kAdd:
      return EvalNode(*n.lhs, t, mode) + EvalNode(*n.rhs, t, mode);
    case Kind::kSub:
      return EvalNode(*n.lhs, t, mode) - EvalNode(*n.rhs, t, mode);
    case Kind::kMul:
      return EvalNode(*n.lhs, t, mode) * EvalNode(*n.rhs, t, mode);
    case Kind::kDiv:
      return EvalNode(*n.lhs, t, mode) / EvalNode(*n.rhs, t, mode);
    case Kind::kPow: {
      Scalar base = EvalNode(*n.lhs, t, mode);
      Scalar exponent = EvalNode(*n.rhs, t, mode);
      if (mode == Mode::kApprox) {
        double r = std::pow(base.approx(), exponent.approx());
        if (std::isnan(r)) throw Error(ErrorCode::kDomainError, "power is not real");
        if (std::isinf(r) && base.is_zero()) {
          throw Error(ErrorCode::kDivisionByZero, "zero to a negative power");
        }
        return Scalar(r);
      }
      const Rational& e = exponent.exact();
      if (e.get_den() != 1) {
        throw Error(ErrorCode::kExactUnsupported, "non-integer exponent in exact mode");
      }
      if (abs(e.get_num()) > 4096) {
        throw Error(ErrorCode::kDomainError, "exponent too large");
      }
      long k = e.get_num().get_si();
      if (k < 0 && base.is_zero()) {
        throw Error(ErrorCode::kDivisionByZero, "zero to a negative power");
      }
      Rational b = base.exact();
      Rational r;
      mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(std::labs(k)));
      mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(std::labs(k)));
      r.canonicalize();
      if (k < 0) r = 1 / r;
      return Scalar(r);
    }
    case Kind::kSqrt: {
      Scalar arg = EvalNode(*n.lhs, t, mode);
      if (arg.sign() < 0) throw Error(ErrorCode::kDomainError, "sqrt of a negative number");
      if (mode == Mode::kApprox) return Scalar(std::sqrt(arg.approx()));
      if (auto root = ExactSqrt(arg.exact())) return Scalar(*root);
      throw Error(ErrorCode::kExactUnsupported,
                  "sqrt(" + arg.ToString() + ") is not rational");
    }
    case Kind::kSin:
    case Kind::kCos: {
      Scalar arg = EvalNode(*n.lhs, t, mode);
      bool is_sin = n.kind == Kind::kSin;
      if (mode == Mode::kApprox) {
        return Scalar(is_sin ? std::sin(arg.approx()) : std::cos(arg.approx()));
      }
      if (arg.is_zero()) return Scalar(Rational(is_sin ? 0 : 1));
      throw Error(ErrorCode::kExactUnsupported,
                  std::string(is_sin ? "sin" : "cos") + " of a nonzero argument is not rational");
    }
  }
  throw Error(ErrorCode::kSyntaxError, "malformed expression tree");
}

}  // namespace

bool Expression::IsRationalClosed() const {
  return !AnyNode(*root_, Kind::kSqrt, Kind::kSin, Kind::kCos);
}

bool Expression::UsesParameter() const {
  return AnyNode(*root_, Kind::kParameter, Kind::kParameter, Kind::kParameter);
}

std::string Expression::ToString() const { return Render(*root_); }

bool operator==(const Expression& a, const Expression& b) {
  if (!a.root_ || !b.root_) return a.root_ == b.root_;
  return NodesEqual(*a.root_, *b.root_);
}

Expression ParseExpression(std::string_view src) { return Parser(src).Parse(); }

Scalar Evaluate(const Expression& e, const Scalar& t, Mode mode) {
  Scalar param = t;
  if (mode == Mode::kApprox && t.is_exact()) param = t.ToApprox();
  if (mode == Mode::kExact && !t.is_exact()) {
    throw Error(ErrorCode::kExactUnsupported, "exact evaluation needs a rational parameter");
  }
  return EvalNode(e.root(), param, mode);
}

Scalar Evaluate(const Expression& e, Mode mode) {
  return Evaluate(e, Scalar::Zero(mode), mode);
}

// --- polynomials -----------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { Trim(); }

Polynomial Polynomial::Constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::T() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.numerator * b.denominator + b.numerator * a.denominator,
          a.denominator * b.denominator};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.numerator * b.denominator - b.numerator * a.denominator,
          a.denominator * b.denominator};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.numerator * b.numerator, a.denominator * b.denominator};
}

bool RationalFunction::IdenticallyEquals(const RationalFunction& other) const {
  return numerator * other.denominator == other.numerator * denominator;
}

namespace {

std::optional<RationalFunction> ToRf(const Expression::Node& n) {
  switch (n.kind) {
    case Kind::kLiteral:
      return RationalFunction{Polynomial::Constant(n.value)};
    case Kind::kParameter:
      return RationalFunction{Polynomial::T()};
    case Kind::kNegate: {
      auto a = ToRf(*n.lhs);
      if (!a) return std::nullopt;
      return RationalFunction{Polynomial() - a->numerator, a->denominator};
    }
    case Kind::kAdd:
    case Kind::kSub:
    case Kind::kMul:
    case Kind::kDiv: {
      auto a = ToRf(*n.lhs);
      auto b = ToRf(*n.rhs);
      if (!a || !b) return std::nullopt;
      if (n.kind == Kind::kAdd) return *a + *b;
      if (n.kind == Kind::kSub) return *a - *b;
      if (n.kind == Kind::kMul) return *a * *b;
      if (b->numerator.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
      return *a * RationalFunction{b->denominator, b->numerator};
    }
    case Kind::kPow: {
      auto base = ToRf(*n.lhs);
      auto exponent = ToRf(*n.rhs);
      if (!base || !exponent) return std::nullopt;
      const auto& ec = exponent->numerator.coeffs();
      if (exponent->numerator.degree() > 0 || exponent->denominator.degree() > 0) {
        return std::nullopt;
      }
      Rational e = ec.empty() ? Rational(0)
                              : ec[0] / exponent->denominator.coeffs()[0];
      if (e.get_den() != 1 || abs(e.get_num()) > 256) return std::nullopt;
      long k = e.get_num().get_si();
      RationalFunction acc{Polynomial::Constant(1)};
      for (long i = 0; i < std::labs(k); ++i) acc = acc * *base;
      if (k < 0) {
        if (acc.numerator.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
        acc = RationalFunction{acc.denominator, acc.numerator};
      }
      return acc;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<RationalFunction> ToRationalFunction(const Expression& e) {
  return ToRf(e.root());
}

}  // namespace rigikit
