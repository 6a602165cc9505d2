#include <gtest/gtest.h>

#include "logcouple/json.hpp"
#include "logcouple/oracle/generators.hpp"
#include "logcouple/sfunction.hpp"

using namespace logcouple;

namespace {

LogVector v(const char* text) { return parse_vector(text); }
ExtValue inf() { return ExtValue::infinity(); }
ExtValue level(Level m) { return ExtValue(psi_vector(m)); }

SFunction lin(std::vector<Shift> shifts, const char* beta = "[]") { return SFunction::linear(std::move(shifts), v(beta)); }

}  // namespace

TEST(SFunction, EvaluationExamples) {
  EXPECT_EQ(SFunction::iterate(1)(0), level(1));
  // D_F starts at ψ_1 for s^-1(x)
  EXPECT_TRUE(SFunction::iterate(-1)(0).is_infinite());
  EXPECT_EQ(SFunction::iterate(-1)(1), level(0));
  EXPECT_EQ(lin({{0, 1}, {1, -1}})(2), ExtValue(-LogVector::unit(3)));
}

TEST(SFunction, EvaluationMatchesIteratedSuccessor) {
  const auto g = oracle::GenConfig{};
  oracle::Generator gen(g);
  for (int i = 0; i < 300; ++i) {
    const SFunction f = gen.sfunction();
    for (Level m = 0; m <= 12; ++m) {
      ExtValue want = f.in_domain(m) ? ExtValue(LogVector{}) : inf();
      if (f.in_domain(m)) {
        LogVector sum;
        for (const auto& s : f.shifts()) sum += s.q * iterate_succ(level(m), s.k).finite();
        want = ExtValue(sum - f.beta());
      }
      ASSERT_EQ(f(m), want) << to_string(f) << " at " << m;
    }
  }
}

TEST(SFunction, CanonicalConstruction) {
  const SFunction f = lin({{1, 1}, {0, 2}, {1, Rational(1, 2)}}, "[0,1]");
  ASSERT_EQ(f.shifts().size(), 2u);
  EXPECT_EQ(f.shifts()[0].k, 0);
  EXPECT_EQ(f.shifts()[1].q, Rational(3, 2));
  EXPECT_EQ(f.coefficient_sum(), Rational(7, 2));
  // everything cancels: a constant remains
  EXPECT_EQ(lin({{2, 1}, {2, -1}}, "[1]"), SFunction::constant(ExtValue(v("[-1]"))));
}

TEST(SFunction, Arithmetic) {
  const SFunction x = SFunction::iterate(0);
  EXPECT_EQ(x + (-x), SFunction::constant(ExtValue(LogVector{})));
  EXPECT_EQ(scale_sf(Rational(1, 2), lin({{0, 2}}, "[2,4]")), lin({{0, 1}}, "[1,2]"));
  EXPECT_EQ(SFunction::iterate(1) + x, lin({{0, 1}, {1, 1}}));
  EXPECT_EQ(x + SFunction::constant(inf()), SFunction::constant(inf()));
  EXPECT_EQ(x + SFunction::constant(ExtValue(v("[1]"))), lin({{0, 1}}, "[-1]"));
}

TEST(PsiInterval, Basics) {
  const PsiInterval i{2, 5};
  EXPECT_TRUE(i.contains(2));
  EXPECT_FALSE(i.contains(5));
  EXPECT_FALSE(i.is_singleton());
  EXPECT_TRUE((PsiInterval{4, 5}).is_singleton());
  EXPECT_TRUE((PsiInterval{4, 4}).empty());
  EXPECT_TRUE((PsiInterval{4, std::nullopt}).contains(1000000));
  EXPECT_EQ(to_string(PsiInterval{0, 3}), "[psi_0, psi_3)");
  EXPECT_EQ(render(PsiInterval{1, std::nullopt}), "[[1,1], inf)");
}

TEST(Piecewise, ValidatesCover) {
  const SFunction x = SFunction::iterate(0);
  EXPECT_THROW(PiecewiseSFunction(std::vector<Piece>{{PsiInterval{1, std::nullopt}, x}}), error);
  EXPECT_THROW(PiecewiseSFunction(std::vector<Piece>{{PsiInterval{0, 3}, x}}), error);
  EXPECT_THROW(PiecewiseSFunction(std::vector<Piece>{{PsiInterval{0, 3}, x}, {PsiInterval{4, std::nullopt}, x}}), error);
  // equal neighbours merge
  const PiecewiseSFunction f(std::vector<Piece>{{PsiInterval{0, 3}, x}, {PsiInterval{3, std::nullopt}, x}});
  EXPECT_EQ(f, PiecewiseSFunction(x));
}

TEST(Piecewise, EvaluationAndBreakpoints) {
  const PiecewiseSFunction f(std::vector<Piece>{{PsiInterval{0, 2}, SFunction::constant(inf())},
                                                {PsiInterval{2, 3}, SFunction::iterate(1)},
                                                {PsiInterval{3, std::nullopt}, SFunction::iterate(-1)}});
  EXPECT_TRUE(f(1).is_infinite());
  EXPECT_EQ(f(2), level(3));
  EXPECT_EQ(f(9), level(8));
  EXPECT_EQ(f.breakpoints(), (std::vector<Level>{2, 3}));
}

TEST(Piecewise, AdditionRespectsDomains) {
  // p(x) - p(x) is 0 on D_F but ∞ at s0, where p(x) is ∞
  const PiecewiseSFunction px(SFunction::iterate(-1));
  const PiecewiseSFunction sum = px + (-px);
  EXPECT_TRUE(sum(0).is_infinite());
  for (Level m = 1; m < 10; ++m) EXPECT_EQ(sum(m), ExtValue(LogVector{}));
}

TEST(Piecewise, AdditionOnSharedPiece) {
  const PiecewiseSFunction f = PiecewiseSFunction(SFunction::iterate(1)) + PiecewiseSFunction(SFunction::iterate(0));
  ASSERT_EQ(f.pieces().size(), 1u);
  EXPECT_EQ(f.pieces()[0].fn, lin({{0, 1}, {1, 1}}));
}

TEST(Render, SFunctions) {
  EXPECT_EQ(to_string(lin({{0, 1}, {1, -1}})), "x - s(x)");
  EXPECT_EQ(to_string(lin({{-2, -1}, {3, Rational(1, 2)}}, "[0,1]")), "-p^2(x) + 1/2*s^3(x) - [0,1]");
  EXPECT_EQ(render(SFunction::constant(level(2)), TextStyle{true}), "psi_2");
  EXPECT_EQ(render(SFunction::constant(level(2))), "[1,1,1]");
}

TEST(Json, RoundTrips) {
  const SFunction f = lin({{-1, Rational(-3, 4)}, {2, 5}}, "[0,1/2]");
  EXPECT_EQ(to_json(f).dump(), R"({"beta":["0","1/2"],"kind":"linear","shifts":[[-1,"-3/4"],[2,"5"]]})");
  EXPECT_EQ(sfunction_from_json(to_json(f)), f);
  EXPECT_EQ(sfunction_from_json(to_json(SFunction::constant(inf()))), SFunction::constant(inf()));
  const PiecewiseSFunction pw(std::vector<Piece>{{PsiInterval{0, 1}, SFunction::constant(inf())},
                                                 {PsiInterval{1, std::nullopt}, f}});
  EXPECT_EQ(piecewise_from_json(to_json(pw)), pw);
  EXPECT_EQ(to_json(pw)[1]["interval"].dump(), R"({"hi_level":null,"lo_level":1})");
}
