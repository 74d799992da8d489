#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "expr_trees.hpp"
#include "lieframe/error.hpp"
#include "lieframe/expr.hpp"

using namespace lieframe;
using lieframe::fixtures::all_finite;
using lieframe::fixtures::oracle_eval;
using lieframe::fixtures::random_tree;

namespace {

double eval(std::string_view text, double s) { return eval_expr(*parse_expr(text), s); }

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(eval("1+s^2", 2.0), 5.0);
  EXPECT_EQ(eval("sin(s)*exp(-s)", 0.0), 0.0);
  EXPECT_EQ(eval("sqrt(s)", 4.0), 2.0);
  EXPECT_EQ(eval("s^0", 7.0), 1.0);
}

TEST(Parse, PrecedenceAndAssociativity) {
  EXPECT_EQ(eval("-s^2", 3.0), -9.0);
  EXPECT_EQ(eval("2^3^2", 0.0), 512.0);
  EXPECT_EQ(eval("8/2/2", 0.0), 2.0);
  EXPECT_EQ(eval("2-3-4", 0.0), -5.0);
  EXPECT_EQ(eval("2*3+4*5", 0.0), 26.0);
  EXPECT_EQ(eval("-(1+s)*2", 1.0), -4.0);
  EXPECT_EQ(eval("2^-1", 0.0), 0.5);
  EXPECT_EQ(eval(" 1.5e1 + abs( -s ) ", 2.0), 17.0);
}

TEST(Parse, SyntaxErrorCarriesOffset) {
  try {
    parse_expr("2*^3");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    EXPECT_EQ(e.offset(), 2u);
    EXPECT_FALSE(e.expected().empty());
  }
  for (const char* bad : {"", "(1+s", "1+", "s s", "sin s", "1..2", "sin()"}) {
    EXPECT_THROW(parse_expr(bad), SyntaxError) << bad;
  }
}

TEST(Parse, UnknownIdentifier) {
  try {
    parse_expr("1 + foo(s)");
    FAIL();
  } catch (const UnknownIdentifier& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownIdentifier);
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_EQ(e.name(), "foo");
  }
  EXPECT_THROW(parse_expr("x"), UnknownIdentifier);
}

TEST(Eval, DomainErrorNamesSubexpression) {
  try {
    eval("2 + 1/s", 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainError);
    EXPECT_NE(std::string(e.what()).find("'1/s'"), std::string::npos) << e.what();
  }
  EXPECT_THROW(eval("log(s-1)", 0.5), Error);
}

TEST(ToString, MinimalParentheses) {
  EXPECT_EQ(to_string(*parse_expr("(1+s)*2")), "(1+s)*2");
  EXPECT_EQ(to_string(*parse_expr("1+(s*2)")), "1+s*2");
  EXPECT_EQ(to_string(*parse_expr("(2^3)^2")), "(2^3)^2");
  EXPECT_EQ(to_string(*parse_expr("2^(3^2)")), "2^3^2");
  EXPECT_EQ(to_string(*parse_expr("1-(2-3)")), "1-(2-3)");
}

TEST(Properties, RandomRoundTrips) {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 1000; ++k) {
    const ExprPtr ast = random_tree(rng, 6);
    const std::string text = to_string(*ast);
    const ExprPtr back = parse_expr(text);
    ASSERT_TRUE(structurally_equal(*ast, *back)) << text;
    EXPECT_EQ(to_string(*back), text);
  }
}

TEST(Properties, EvaluationMatchesOracle) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> sdist(-3.0, 3.0);
  int finite = 0;
  for (int k = 0; k < 1000; ++k) {
    const ExprPtr ast = parse_expr(to_string(*random_tree(rng, 6)));
    const double s = sdist(rng);
    if (all_finite(*ast, s)) {
      ++finite;
      const double expected = oracle_eval(*ast, s);
      const double got = eval_expr(*ast, s);
      EXPECT_LE(std::fabs(got - expected), 4 * std::numeric_limits<double>::epsilon() * std::fabs(expected));
    } else {
      EXPECT_THROW(eval_expr(*ast, s), Error);
    }
  }
  EXPECT_GT(finite, 300);
}
