#include <gtest/gtest.h>

#include "logcouple/parser.hpp"

using namespace logcouple;

namespace {

Term x() { return Term::var(); }
Term c(const char* text) { return Term::constant(parse_vector(text)); }

}  // namespace

TEST(ParseTerm, Structure) {
  EXPECT_EQ(parse_term("p(s(x))"), Term::p(Term::s(x())));
  EXPECT_EQ(parse_term("psi(x + d2(s(x)) - [0,1])"),
            Term::psi(Term::add(x(), Term::add(Term::delta(2, Term::s(x())), Term::neg(c("[0,1]"))))));
  EXPECT_EQ(parse_term("0"), Term::zero());
  EXPECT_EQ(parse_term("inf"), Term::infty());
  EXPECT_EQ(parse_term("-(x)"), Term::neg(x()));
}

TEST(ParseTerm, SumsNestToTheRight) {
  EXPECT_EQ(parse_term("x + [1] + [2]"), Term::add(x(), Term::add(c("[1]"), c("[2]"))));
  EXPECT_EQ(parse_term("x - [1] - [2]"), Term::add(x(), Term::add(Term::neg(c("[1]")), Term::neg(c("[2]")))));
}

TEST(ParseTerm, WhitespaceIsInsignificant) {
  EXPECT_EQ(parse_term("  psi ( x+[ 1 , 2 ] )  "), parse_term("psi(x+[1,2])"));
}

TEST(ParseTerm, Errors) {
  EXPECT_THROW(parse_term("x + +"), syntax_error);
  EXPECT_THROW(parse_term(""), syntax_error);
  EXPECT_THROW(parse_term("psi(x"), syntax_error);
  EXPECT_THROW(parse_term("psi(x, x)"), arity_error);
  EXPECT_THROW(parse_term("foo(x)"), unknown_symbol);
  EXPECT_THROW(parse_term("d0(x)"), unknown_symbol);
  EXPECT_THROW(parse_term("y"), unknown_symbol);
  EXPECT_THROW(parse_term("3"), syntax_error);
  EXPECT_THROW(parse_term("x x"), syntax_error);
  EXPECT_THROW(parse_term("x < 0"), syntax_error);
}

TEST(ParseTerm, ErrorPositionPointsAtTheProblem) {
  try {
    (void)parse_term("psi(x) + bar(x)");
    FAIL();
  } catch (const unknown_symbol& e) {
    EXPECT_EQ(e.position(), 9u);
  }
}

TEST(ParseCondition, Structure) {
  const Condition atom = parse_condition("x = p(s(x))");
  EXPECT_EQ(atom, Condition::atom(x(), Relation::Equal, Term::p(Term::s(x()))));
  EXPECT_EQ(parse_condition("x < [1] & x > 0 | !(x = [1,1])"),
            Condition::disj(Condition::conj(Condition::atom(x(), Relation::Less, c("[1]")),
                                            Condition::atom(x(), Relation::Greater, Term::zero())),
                            Condition::negation(Condition::atom(x(), Relation::Equal, c("[1,1]")))));
}

TEST(ParseCondition, ParenthesesGroupConditionsOrTerms) {
  EXPECT_EQ(parse_condition("(x < [1] | x > [2]) & x = x"),
            Condition::conj(Condition::disj(Condition::atom(x(), Relation::Less, c("[1]")),
                                            Condition::atom(x(), Relation::Greater, c("[2]"))),
                            Condition::atom(x(), Relation::Equal, x())));
  EXPECT_EQ(parse_condition("(x + [1]) < 0"), Condition::atom(Term::add(x(), c("[1]")), Relation::Less, Term::zero()));
}

TEST(ParseCondition, Errors) {
  EXPECT_THROW(parse_condition("x"), syntax_error);
  EXPECT_THROW(parse_condition("x < "), syntax_error);
  EXPECT_THROW(parse_condition("x < 0 &"), syntax_error);
  EXPECT_THROW(parse_condition("(x < 0"), syntax_error);
}

TEST(Parse, DistinguishesTermsFromConditions) {
  EXPECT_TRUE(std::holds_alternative<Term>(parse("psi(x)")));
  EXPECT_TRUE(std::holds_alternative<Condition>(parse("psi(x) = x")));
  EXPECT_THROW(parse("psi(x"), syntax_error);
}
