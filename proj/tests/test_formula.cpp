// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "sccpe/error.hpp"
#include "sccpe/formula.hpp"
#include "sccpe/formula_io.hpp"

namespace sccpe {
namespace {

using fixtures::F;

TEST(Formula, DefaultIsTrue) {
  EXPECT_TRUE(Formula().is_true());
  EXPECT_EQ(Formula(), Formula::truth());
}

TEST(Formula, ConnectivesNeedTwoOperands) {
  EXPECT_THROW(Formula::and_({Formula::truth()}), MalformedFormula);
  EXPECT_THROW(Formula::or_({}), MalformedFormula);
}

TEST(Formula, ConjoinAppliesStoreIdentities) {
  const Formula c = F("X < 5");
  EXPECT_EQ(conjoin(Formula::truth(), c), c);
  EXPECT_EQ(conjoin(c, Formula::truth()), c);
  EXPECT_TRUE(conjoin(c, Formula::falsity()).is_false());
  EXPECT_EQ(conjoin(c, F("Y > 1")).op(), Op::And);
}

TEST(Formula, NegateFoldsConstantsOnly) {
  EXPECT_TRUE(negate(Formula::truth()).is_false());
  EXPECT_TRUE(negate(Formula::falsity()).is_true());
  EXPECT_EQ(negate(F("X < 1")).op(), Op::Not);
}

TEST(Formula, CanonicalizeFlattensSortsAndDeduplicates) {
  const Formula a = F("X < 5");
  const Formula b = F("Y > 1");
  const Formula nested = Formula::and_({b, Formula::and_({a, Formula::truth(), b})});
  const Formula flat = canonicalize(Formula::and_({a, b}));
  EXPECT_EQ(canonicalize(nested), flat);
  EXPECT_EQ(canonicalize(Formula::and_({b, a})), flat);
  EXPECT_TRUE(canonicalize(Formula::and_({a, Formula::falsity()})).is_false());
  EXPECT_TRUE(canonicalize(Formula::and_({Formula::truth(), Formula::truth()})).is_true());
  EXPECT_EQ(canonicalize(Formula::and_({a, Formula::truth()})), a);
  EXPECT_TRUE(canonicalize(Formula::or_({a, Formula::truth()})).is_true());
  EXPECT_EQ(canonicalize(Formula::or_({a, Formula::falsity()})), a);
}

TEST(Formula, CanonicalizeIsIdempotent) {
  fixtures::Gen gen(11);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen.formula(4);
    const Formula c = canonicalize(f);
    ASSERT_EQ(canonicalize(c), c) << to_string(f);
  }
}

TEST(Formula, CanonicalizePreservesMeaning) {
  fixtures::Gen gen(12);
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen.formula(3);
    ASSERT_TRUE(oracle::brute_force_equivalent(f, canonicalize(f))) << to_string(f);
  }
}

TEST(Formula, FreeVarsReportsSorts) {
  const auto vars = free_vars(F("X < Y and B0"));
  const std::set<VarName> expected{{"B0", Sort::Bool}, {"X", Sort::Int}, {"Y", Sort::Int}};
  EXPECT_EQ(vars, expected);
  EXPECT_THROW(free_vars(Formula::and_({Formula::var("X"), F("X > 1")})), MalformedFormula);
}

TEST(Formula, TermOrderIsTotalAndConsistent) {
  fixtures::Gen gen(13);
  for (int i = 0; i < 300; ++i) {
    const Formula a = gen.formula(2);
    const Formula b = gen.formula(2);
    EXPECT_EQ((a <=> b) == 0, a == b);
    EXPECT_EQ(a <=> b, 0 <=> (b <=> a));
  }
}

TEST(FormulaIo, PrintsAnnotatedSyntax) {
  EXPECT_EQ(to_string(F("X = 25")), "X:Integer === 25");
  EXPECT_EQ(to_string(F("X =/= Y")), "X:Integer =/== Y:Integer");
  EXPECT_EQ(to_string(F("not B0")), "not(B0:Boolean)");
  EXPECT_EQ(to_string(F("X < -3")), "X:Integer < -3");
}

TEST(FormulaIo, DisplayDropsAnnotations) {
  EXPECT_EQ(to_display_string(F("X:Integer === 25 and B1:Boolean")), "X = 25 and B1");
  EXPECT_EQ(to_display_string(F("C =/= 5")), "C =/= 5");
}

TEST(FormulaIo, ReadsWhatItPrints) {
  fixtures::Gen gen(14);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen.formula(4);
    ASSERT_EQ(read_formula(to_string(f)), f) << to_string(f);
  }
}

TEST(FormulaIo, ArithmeticRoundTrips) {
  const Formula f = Formula::le(IntExpr::sub(IntExpr::var("X"), IntExpr::mul(IntExpr::lit(-2), IntExpr::var("Y"))),
                                IntExpr::neg(IntExpr::lit(4)));
  EXPECT_EQ(read_formula(to_string(f)), f);
}

TEST(FormulaIo, UsesEnvironmentForBareNames) {
  const SortEnv env{{"B", Sort::Bool}, {"C", Sort::Bool}};
  EXPECT_EQ(read_formula("B = C", &env).op(), Op::BoolEq);
  EXPECT_EQ(read_formula("X = Y").op(), Op::IntEq);
}

TEST(FormulaIo, RejectsGarbage) {
  EXPECT_THROW(read_formula("X <"), ParseError);
  EXPECT_THROW(read_formula("(X < 1"), ParseError);
  EXPECT_THROW(read_formula("X < 1 )"), ParseError);
}

}  // namespace
}  // namespace sccpe
