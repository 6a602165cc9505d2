#include <gtest/gtest.h>

#include "logcouple/oracle/generators.hpp"
#include "logcouple/parser.hpp"

using namespace logcouple;

namespace {

ExtValue at(const char* text) { return parse_ext_value(text); }
ExtValue ev(const char* term, const char* x) { return eval(parse_term(term), at(x)); }
bool holds(const char* cond, const char* x) { return eval_condition(parse_condition(cond), at(x)); }

}  // namespace

TEST(Eval, Examples) {
  EXPECT_EQ(ev("p(s(x))", "[1,1,1,1]"), ExtValue(psi_vector(3)));
  // s((2)) = ψ(∫(2)) = ψ((1)) = s0, and p(s0) = ∞
  EXPECT_TRUE(ev("p(s(x))", "[2]").is_infinite());
  EXPECT_EQ(ev("d2([1,3])", "[7,7]"), at("[1/2,3/2]"));
  EXPECT_EQ(ev("d2([1,3])", "inf"), at("[1/2,3/2]"));
}

TEST(Eval, InfinityPropagates) {
  EXPECT_TRUE(ev("x + [1]", "inf").is_infinite());
  EXPECT_TRUE(ev("-(x)", "inf").is_infinite());
  EXPECT_TRUE(ev("psi(x)", "inf").is_infinite());
  EXPECT_TRUE(ev("s(x)", "inf").is_infinite());
  EXPECT_TRUE(ev("x - x", "inf").is_infinite());
  EXPECT_TRUE(ev("psi(x - x)", "[3]").is_infinite());
  EXPECT_TRUE(ev("inf", "[1]").is_infinite());
}

TEST(EvalCondition, Examples) {
  EXPECT_TRUE(holds("x = p(s(x))", "[1,1]"));
  EXPECT_FALSE(holds("x = p(s(x))", "[1,2]"));
  EXPECT_TRUE(holds("x = p(s(x))", "[1]"));
  EXPECT_FALSE(holds("x = p(s(x))", "[0,1]"));
  EXPECT_TRUE(holds("x < inf", "[0,0,9]"));
  EXPECT_FALSE(holds("x < inf", "inf"));
  EXPECT_TRUE(holds("psi(x) = x", "[1]"));
  EXPECT_FALSE(holds("psi(x) = x", "[2]"));
  EXPECT_TRUE(holds("!(x < 0) & (x > [1] | x = [1])", "[1]"));
}

TEST(Print, CanonicalText) {
  EXPECT_EQ(to_string(parse_term("psi( x+d2(s(x)) -[0,1])")), "psi(x + d2(s(x)) - [0,1])");
  EXPECT_EQ(to_string(parse_term("-(x + [1])")), "-(x + [1])");
  EXPECT_EQ(to_string(parse_condition("!(x<0)&x=x|x>[1]")), "!(x < 0) & x = x | x > [1]");
}

TEST(Print, RoundTripsRandomTerms) {
  oracle::GenConfig cfg;
  cfg.seed = 3;
  oracle::Generator g(cfg);
  for (int i = 0; i < 2000; ++i) {
    const Term t = g.term(6);
    EXPECT_EQ(parse_term(to_string(t)), t) << to_string(t);
    const Condition c = g.condition(3, 3);
    EXPECT_EQ(parse_condition(to_string(c)), c) << to_string(c);
  }
}

TEST(Json, TreeUsesVariantTags) {
  const auto j = to_json(parse_term("psi(x + d2([1]))"));
  EXPECT_EQ(j.dump(), R"({"arg":{"args":[{"tag":"Var"},{"arg":{"tag":"Const","value":"[1]"},"n":2,"tag":"Delta"}],"tag":"Add"},"tag":"Psi"})");
}

TEST(Term, Metrics) {
  const Term t = parse_term("psi(x + s([1]))");
  EXPECT_TRUE(t.has_var());
  EXPECT_FALSE(parse_term("s([1]) + 0").has_var());
  EXPECT_EQ(t.depth(), 3u);
  EXPECT_EQ(t.size(), 5u);
}
