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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "rigikit/error.hpp"
#include "rigikit/expression.hpp"
#include "rigikit/matrix.hpp"
#include "rigikit/scalar.hpp"

namespace rigikit {
namespace {

TEST(Rational, ParseForms) {
  EXPECT_EQ(*ParseRational("3/4"), Rational(3) / 4);
  EXPECT_EQ(*ParseRational("-7/4"), Rational(-7) / 4);
  EXPECT_EQ(*ParseRational("0.125"), Rational(1) / 8);
  EXPECT_EQ(*ParseRational("2.5E+2"), Rational(250));
  EXPECT_EQ(*ParseRational("1e-3"), Rational(1) / 1000);
  EXPECT_FALSE(ParseRational("1/0"));
  EXPECT_FALSE(ParseRational("abc"));
}

TEST(Rational, Canonical) {
  Rational q = *ParseRational("6/8");
  EXPECT_EQ(q.get_num(), 3);
  EXPECT_EQ(q.get_den(), 4);
  EXPECT_EQ(RationalToString(*ParseRational("0/5")), "0");
  EXPECT_EQ(RationalToString(Rational(-3) / 4), "-3/4");
}

TEST(Rational, DoubleConversion) {
  EXPECT_EQ(RationalToDouble(Rational(1) / 3), 1.0 / 3.0);
  EXPECT_EQ(DoubleToRational(0.1), DoubleToRational(0.1));
  EXPECT_EQ(RationalToDouble(DoubleToRational(0.1)), 0.1);
  EXPECT_EQ(DoubleToString(0.1), "0.1");
  EXPECT_EQ(*ExactSqrt(Rational(9) / 4), Rational(3) / 2);
  EXPECT_FALSE(ExactSqrt(Rational(2)));
}

TEST(Scalar, ModesDoNotMix) {
  Scalar a(Rational(1)), b(1.0);
  EXPECT_RIGIKIT_ERROR((a + b), kModeMismatch);
  EXPECT_RIGIKIT_ERROR((a / Scalar(Rational(0))), kDivisionByZero);
  EXPECT_EQ((a + a).exact(), 2);
  EXPECT_EQ(a.ToApprox().approx(), 1.0);
}

TEST(Expression, ParsesPaperStrings) {
  Expression e = ParseExpression("3/4");
  EXPECT_EQ(e.root().kind, Expression::Kind::kDiv);
  EXPECT_EQ(ParseExpression("sqrt(2)").root().kind, Expression::Kind::kSqrt);
  Expression p = ParseExpression("1+cos(t)^2");
  ASSERT_EQ(p.root().kind, Expression::Kind::kAdd);
  EXPECT_EQ(p.root().rhs->kind, Expression::Kind::kPow);
  EXPECT_EQ(p.root().rhs->lhs->kind, Expression::Kind::kCos);
}

TEST(Expression, Precedence) {
  EXPECT_EQ(Evaluate(ParseExpression("-2^2"), Mode::kExact).exact(), -4);
  EXPECT_EQ(Evaluate(ParseExpression("2^-1"), Mode::kExact).exact(), Rational(1) / 2);
  EXPECT_EQ(Evaluate(ParseExpression("8/2/2"), Mode::kExact).exact(), 2);
  EXPECT_EQ(Evaluate(ParseExpression("8-2-2"), Mode::kExact).exact(), 4);
  EXPECT_EQ(Evaluate(ParseExpression("2*3+4*5"), Mode::kExact).exact(), 26);
  EXPECT_EQ(Evaluate(ParseExpression(" ( 1 + 2 ) * 3 "), Mode::kExact).exact(), 9);
}

TEST(Expression, Errors) {
  EXPECT_RIGIKIT_ERROR(ParseExpression("1+"), kSyntaxError);
  EXPECT_RIGIKIT_ERROR(ParseExpression(""), kSyntaxError);
  EXPECT_RIGIKIT_ERROR(ParseExpression("(1"), kSyntaxError);
  EXPECT_RIGIKIT_ERROR(ParseExpression("x+1"), kUnknownSymbol);
  EXPECT_RIGIKIT_ERROR(ParseExpression("1/0"), kDivisionByZero);
  EXPECT_RIGIKIT_ERROR(Evaluate(ParseExpression("sqrt(2)"), Mode::kExact), kExactUnsupported);
  EXPECT_RIGIKIT_ERROR(Evaluate(ParseExpression("sqrt(-1)"), Mode::kApprox), kDomainError);
  EXPECT_RIGIKIT_ERROR(Evaluate(ParseExpression("1/(t-t)"), Mode::kExact), kDivisionByZero);
}

TEST(Expression, SyntaxErrorCarriesPosition) {
  try {
    ParseExpression("1 + * 2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(e.detail().find("position=4"), std::string::npos) << e.detail();
  }
}

TEST(Expression, Evaluation) {
  EXPECT_EQ(Evaluate(ParseExpression("3/4"), Mode::kExact).exact(), Rational(3) / 4);
  EXPECT_EQ(Evaluate(ParseExpression("sqrt(2)"), Mode::kApprox).approx(), 1.4142135623730951);
  EXPECT_NEAR(Evaluate(ParseExpression("sin(t)^2+cos(t)^2"), Scalar(0.7), Mode::kApprox).approx(), 1.0, 1e-15);
  EXPECT_EQ(Evaluate(ParseExpression("sqrt(9/4)"), Mode::kExact).exact(), Rational(3) / 2);
  EXPECT_EQ(Evaluate(ParseExpression("cos(0)"), Mode::kExact).exact(), 1);
  EXPECT_EQ(Evaluate(ParseExpression("t^3 - t"), Scalar(Rational(2)), Mode::kExact).exact(), 6);
}

TEST(Expression, UnparseIsFixpoint) {
  for (const char* src : {"1+cos(t)^2", "-(t-1)^2", "(1-t)/(1+t^2)", "2^-1", "-2^2", "1-(2-3)",
                          "1/(2*t)", "sqrt(2)*t", "(-t)^3", "3/4", "-3/4", "1e-3", "--t", "t-(-t)"}) {
    Expression e = ParseExpression(src);
    std::string text = e.ToString();
    Expression again = ParseExpression(text);
    EXPECT_EQ(e, again) << src << " -> " << text;
    EXPECT_EQ(again.ToString(), text);
  }
}

TEST(Expression, RationalFunctionIdentity) {
  auto a = ToRationalFunction(ParseExpression("((1-t^2)/(1+t^2))^2 + (2*t/(1+t^2))^2"));
  ASSERT_TRUE(a);
  RationalFunction one;
  one.numerator = Polynomial::Constant(1);
  EXPECT_TRUE(a->IdenticallyEquals(one));
  EXPECT_FALSE(ToRationalFunction(ParseExpression("sin(t)")));
}

TEST(Matrix, RankExamples) {
  EXPECT_EQ(Rank(ExactMatrix{{1, 0}, {0, 1}}), 2u);
  EXPECT_EQ(Rank(ExactMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(Rank(FloatMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(Rank(ExactMatrix(0, 3)), 0u);
}

TEST(Matrix, KernelExamples) {
  EXPECT_TRUE(Kernel(ExactMatrix{{1, 0}, {0, 1}}).empty());
  auto k = Kernel(ExactMatrix{{1, 1}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], 1);
  EXPECT_EQ(k[0][1], -1);
  auto kf = Kernel(FloatMatrix{{1, 1}});
  ASSERT_EQ(kf.size(), 1u);
  EXPECT_NEAR(std::abs(kf[0][0]), std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(kf[0][0] + kf[0][1], 0, 1e-12);
}

TEST(Matrix, Determinant) {
  EXPECT_EQ(Determinant(ExactMatrix{{2, 1}, {7, 4}}), 1);
  EXPECT_EQ(Determinant(ExactMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(Determinant(ExactMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(Matrix, LeastSquares) {
  auto x = LeastSquares(FloatMatrix{{1, 0}, {0, 2}, {0, 0}}, {1, 4, 0});
  EXPECT_NEAR(x[0], 1, 1e-12);
  EXPECT_NEAR(x[1], 2, 1e-12);
}

ExactMatrix RandomExact(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound,
                        bool low_rank) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  }
  if (low_rank && rows > 2) {
    // Make the last row a combination of the first two.
    for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = 2 * m(0, j) - 3 * m(1, j);
  }
  return m;
}

TEST(Matrix, RankAgreesWithOracles) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    ExactMatrix m = RandomExact(rng, size(rng), size(rng), 1000, trial % 2 == 0);
    std::size_t r = Rank(m);
    EXPECT_EQ(r, oracle::NaiveRank(m));
    EXPECT_EQ(r, Rank(m.Transposed()));
    EXPECT_EQ(r, Rank(ToFloat(m), 1e-9));
    EXPECT_EQ(Kernel(m).size() + r, m.cols());
    EXPECT_EQ(Kernel(ToFloat(m), 1e-9).size() + Rank(ToFloat(m), 1e-9), m.cols());
    for (const auto& v : Kernel(m)) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        EXPECT_EQ(s, 0);
      }
    }
  }
}

TEST(Matrix, SmallEntriesLowRank) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    ExactMatrix m = RandomExact(rng, 6, 5, 1, false);
    EXPECT_EQ(Rank(m), oracle::NaiveRank(m));
  }
}

}  // namespace
}  // namespace rigikit
