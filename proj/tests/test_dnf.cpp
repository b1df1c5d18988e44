// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "sccpe/dnf.hpp"
#include "sccpe/error.hpp"
#include "sccpe/formula_io.hpp"

namespace sccpe {
namespace {

using fixtures::F;

TEST(Dnf, TightensStrictBounds) {
  const Dnf lt = to_dnf(F("X < 5"));
  ASSERT_EQ(lt.size(), 1U);
  EXPECT_EQ(lt[0].atoms, std::vector<DLAtom>{DLAtom::upper("X", 4)});

  const Dnf gt = to_dnf(F("X > 5"));
  ASSERT_EQ(gt.size(), 1U);
  EXPECT_EQ(gt[0].atoms, std::vector<DLAtom>{DLAtom::lower("X", 6)});
}

TEST(Dnf, MirrorsLiteralOnTheLeft) {
  const Dnf d = to_dnf(F("3 < X"));
  ASSERT_EQ(d.size(), 1U);
  EXPECT_EQ(d[0].atoms, std::vector<DLAtom>{DLAtom::lower("X", 4)});
}

TEST(Dnf, VariableComparisonsBecomeDifferences) {
  const Dnf d = to_dnf(F("X < Y"));
  ASSERT_EQ(d.size(), 1U);
  EXPECT_EQ(d[0].atoms, std::vector<DLAtom>{DLAtom::diff("X", "Y", -1)});
}

TEST(Dnf, DisequalitySplits) {
  EXPECT_EQ(to_dnf(F("X =/= 5")).size(), 2U);
  EXPECT_EQ(to_dnf(F("not(X = Y)")).size(), 2U);
  const Dnf eq = to_dnf(F("X = 5"));
  ASSERT_EQ(eq.size(), 1U);
  EXPECT_EQ(eq[0].atoms.size(), 2U);
}

TEST(Dnf, ConstantsFold) {
  EXPECT_TRUE(to_dnf(F("3 < 2")).empty());
  const Dnf t = to_dnf(F("2 < 3"));
  ASSERT_EQ(t.size(), 1U);
  EXPECT_TRUE(t[0].atoms.empty());
  EXPECT_TRUE(t[0].bools.empty());
}

TEST(Dnf, BooleanEqualityIsInsideTheFragment) {
  EXPECT_EQ(to_dnf(F("B0:Boolean === B1:Boolean")).size(), 2U);
  EXPECT_EQ(to_dnf(F("B0:Boolean =/== B1:Boolean")).size(), 2U);
}

TEST(Dnf, RejectsArithmetic) {
  EXPECT_THROW(to_dnf(F("X + Y < 3")), FragmentUnsupported);
  EXPECT_THROW(to_dnf(F("2 * X = 4")), FragmentUnsupported);
}

TEST(Dnf, EnforcesTheConjunctLimit) {
  std::vector<Formula> parts;
  for (int i = 0; i < 14; ++i) parts.push_back(F("X =/= " + std::to_string(i)));
  EXPECT_THROW(to_dnf(Formula::and_(parts), 4096), DnfLimitExceeded);
}

TEST(Dnf, PreservesMeaning) {
  fixtures::Gen gen(21);
  for (int i = 0; i < 500; ++i) {
    const Formula f = gen.formula(3);
    const Formula back = dnf_to_formula(to_dnf(f));
    ASSERT_TRUE(oracle::brute_force_equivalent(f, back)) << to_string(f) << "  vs  " << to_string(back);
  }
}

TEST(Dnf, AtomsReadBackAsDifferences) {
  EXPECT_EQ(to_display_string(atom_to_formula(DLAtom::diff("X", "Y", 2))), "(X - Y) <= 2");
  EXPECT_EQ(to_display_string(atom_to_formula(DLAtom::upper("X", -1))), "X <= -1");
}

}  // namespace
}  // namespace sccpe
