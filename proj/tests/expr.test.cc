// Copyright 2026 The cqedchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "cqed/expr.h"

using namespace cqed;
using std::numbers::pi;

TEST(Expr, EvaluatesArithmetic) {
    EXPECT_DOUBLE_EQ(Expr::parse("2*pi").evaluate(), 2 * pi);
    EXPECT_DOUBLE_EQ(Expr::parse("1+2*3").evaluate(), 7.0);
    EXPECT_DOUBLE_EQ(Expr::parse("(1+2)*3").evaluate(), 9.0);
    EXPECT_DOUBLE_EQ(Expr::parse("8/4/2").evaluate(), 1.0);
    EXPECT_DOUBLE_EQ(Expr::parse("5-3-1").evaluate(), 1.0);
    EXPECT_DOUBLE_EQ(Expr::parse("--2").evaluate(), 2.0);
    EXPECT_DOUBLE_EQ(Expr::parse("-pi/2").evaluate(), -pi / 2);
    EXPECT_DOUBLE_EQ(Expr::parse("1.5e-6").evaluate(), 1.5e-6);
    EXPECT_DOUBLE_EQ(Expr::parse(" sqrt( 4 ) ").evaluate(), 2.0);
}

TEST(Expr, AcosSqrtAngle) {
    EXPECT_NEAR(Expr::parse("2*acos(sqrt(2/3))").evaluate(), 1.2309594173407747, 1e-15);
    EXPECT_DOUBLE_EQ(Expr::parse("2*acos(1/sqrt(4))").evaluate(), 2 * pi / 3);
}

TEST(Expr, Parameters) {
    auto e = Expr::parse("$phi+2*$T-$phi");
    EXPECT_EQ(e.parameters(), (std::vector<std::string>{"phi", "T"}));
    EXPECT_FALSE(e.is_constant());
    EXPECT_DOUBLE_EQ(e.evaluate({{"phi", 1.0}, {"T", 0.25}}), 0.5);
    EXPECT_THROW(e.evaluate({{"phi", 1.0}}), ExprEvalError);
}

TEST(Expr, EvalErrors) {
    EXPECT_THROW(Expr::parse("acos(2)").evaluate(), ExprEvalError);
    EXPECT_THROW(Expr::parse("sqrt(-1)").evaluate(), ExprEvalError);
    EXPECT_THROW(Expr::parse("1/0").evaluate(), ExprEvalError);
    EXPECT_THROW(Expr::parse("1/(1-1)").evaluate(), ExprEvalError);
    EXPECT_THROW(Expr::parse("1e308*10").evaluate(), ExprEvalError);
}

TEST(Expr, SyntaxErrorsCarryOffset) {
    struct Case {
        const char *text;
        std::size_t offset;
    };
    for (auto c : {Case{"2*", 2}, Case{"2*)", 2}, Case{"(1+2", 4}, Case{"foo", 0}, Case{"1 2", 2}, Case{"$", 1},
                   Case{"sqrt 4", 5}, Case{"", 0}}) {
        try {
            Expr::parse(c.text);
            ADD_FAILURE() << "no error for '" << c.text << "'";
        } catch (const ExprSyntaxError &e) {
            EXPECT_EQ(e.offset(), c.offset) << c.text << ": " << e.what();
        }
    }
}

TEST(Expr, ToStringRoundTrips) {
    for (const char *text : {"2*pi", "pi/2", "2*acos(sqrt(2/3))", "-$phi+1", "1-(2-3)", "8/(4/2)", "(1+2)*3",
                             "-(1+2)", "$T*-1", "1.5e-06", "0.1", "sqrt($x)/(2*pi)"}) {
        auto e = Expr::parse(text);
        auto printed = e.to_string();
        EXPECT_EQ(Expr::parse(printed), e) << text << " -> " << printed;
        EXPECT_EQ(printed.find(' '), std::string::npos);
    }
    EXPECT_EQ(Expr::parse("2 * pi").to_string(), "2*pi");
    EXPECT_EQ(Expr::parse("1-(2-3)").to_string(), "1-(2-3)");
    EXPECT_EQ(Expr::parse("(1-2)-3").to_string(), "1-2-3");
}

TEST(Expr, NumberLiteralRoundTrips) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int k = 0; k < 200; ++k) {
        const double v = u(rng);
        auto e = Expr::number(v);
        EXPECT_EQ(Expr::parse(e.to_string()).evaluate(), v);
    }
    EXPECT_THROW(Expr::number(INFINITY), std::invalid_argument);
}

TEST(Expr, StructuralEquality) {
    EXPECT_EQ(Expr::parse("1+2"), Expr::parse("(1)+(2)"));
    EXPECT_NE(Expr::parse("1+2"), Expr::parse("2+1"));
    EXPECT_NE(Expr::parse("$a"), Expr::parse("$b"));
}
