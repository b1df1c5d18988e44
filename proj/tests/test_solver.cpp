// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "sccpe/error.hpp"
#include "sccpe/formula_io.hpp"
#include "sccpe/smtlib.hpp"
#include "sccpe/solver.hpp"

namespace sccpe {
namespace {

using fixtures::F;

bool have_z3() { return std::system("command -v z3 >/dev/null 2>&1") == 0; }

SolverConfig external(const std::string& cmd, int timeout_ms = 5000) {
  SolverConfig cfg;
  cfg.backend = Backend::External;
  cfg.external_command = cmd;
  cfg.timeout_ms = timeout_ms;
  return cfg;
}

TEST(DifferenceLogic, NegativeCycleIsUnsat) {
  const std::vector<DLAtom> cycle{DLAtom::diff("X", "Y", 1), DLAtom::diff("Y", "Z", 1), DLAtom::diff("Z", "X", -3)};
  EXPECT_FALSE(dl_conjunct_sat(cycle));
  const std::vector<DLAtom> tight{DLAtom::diff("X", "Y", 1), DLAtom::diff("Y", "Z", 1), DLAtom::diff("Z", "X", -2)};
  EXPECT_TRUE(dl_conjunct_sat(tight));
}

TEST(DifferenceLogic, BoundsUseTheZeroVertex) {
  EXPECT_FALSE(dl_conjunct_sat(std::vector<DLAtom>{DLAtom::upper("X", 3), DLAtom::lower("X", 4)}));
  EXPECT_TRUE(dl_conjunct_sat(std::vector<DLAtom>{DLAtom::upper("X", 4), DLAtom::lower("X", 4)}));
  EXPECT_TRUE(dl_conjunct_sat({}));
}

TEST(InternalSolver, Examples) {
  EXPECT_FALSE(internal_sat(F("Z >= 10 and Z = 9")));
  EXPECT_TRUE(internal_sat(F("Y < 5 and Y < 20")));
  EXPECT_FALSE(internal_sat(F("B0 and not B0")));
  EXPECT_TRUE(internal_sat(F("X < Y or Y < X")));
  EXPECT_FALSE(internal_sat(F("X < Y and Y < X")));
}

TEST(InternalSolver, AgreesWithBruteForce) {
  fixtures::Gen gen(31);
  for (int i = 0; i < 1500; ++i) {
    const Formula f = gen.formula(3);
    ASSERT_EQ(internal_sat(f), oracle::brute_force_sat(f)) << to_string(f);
  }
}

TEST(Entailment, Examples) {
  EXPECT_TRUE(entails(F("Y < 5"), F("Y < 20")));
  EXPECT_FALSE(entails(F("Y < X"), F("Y < 3")));
  EXPECT_TRUE(entails(F("Z >= 10"), F("Z > 9")));
  EXPECT_FALSE(entails(F("Z >= 10"), F("Y > 9")));
  EXPECT_TRUE(entails(F("X >= 5"), F("X > 1")));
  EXPECT_TRUE(entails(Formula::truth(), Formula::truth()));
  EXPECT_TRUE(entails(Formula::falsity(), F("X = 3")));
}

TEST(Entailment, LatticeLaws) {
  fixtures::Gen gen(32);
  Solver s;
  for (int i = 0; i < 600; ++i) {
    const Formula a = gen.formula(2);
    const Formula b = gen.chance(0.5) ? Formula::or_({a, gen.formula(1)}) : gen.formula(2);
    const Formula c = gen.chance(0.5) ? Formula::or_({b, gen.formula(1)}) : gen.formula(2);
    const Formula ab = conjoin(a, b);
    ASSERT_TRUE(s.entails(a, a));
    if (s.entails(a, b) && s.entails(b, c)) {
      ASSERT_TRUE(s.entails(a, c));
    }
    ASSERT_TRUE(s.entails(ab, a));
    ASSERT_TRUE(s.entails(ab, b));
    if (s.entails(c, a) && s.entails(c, b)) {
      ASSERT_TRUE(s.entails(c, ab));
    }
    ASSERT_TRUE(s.entails(a, Formula::truth()));
    ASSERT_TRUE(s.entails(Formula::falsity(), a));
  }
}

TEST(Solver, RejectsBadConfiguration) {
  SolverConfig zero;
  zero.timeout_ms = 0;
  EXPECT_THROW(Solver{zero}, Error);
  SolverConfig no_cmd;
  no_cmd.backend = Backend::External;
  EXPECT_THROW(Solver{no_cmd}, Error);
}

TEST(Solver, CachesVerdicts) {
  Solver s;
  s.check_sat(F("X < 3"));
  s.check_sat(F("X < 3"));
  EXPECT_EQ(s.cache_size(), 1U);
}

TEST(Solver, OutsideTheFragmentWithoutFailoverThrows) {
  EXPECT_THROW(check_sat(F("X + Y < 3")), FragmentUnsupported);
}

TEST(SmtLib, ScriptShape) {
  const std::string script = to_smtlib2_script(F("X < -2 and B0"));
  EXPECT_NE(script.find("(set-logic QF_LIA)"), std::string::npos);
  EXPECT_NE(script.find("(declare-const |X| Int)"), std::string::npos);
  EXPECT_NE(script.find("(declare-const |B0| Bool)"), std::string::npos);
  EXPECT_NE(script.find("(- 2)"), std::string::npos);
  EXPECT_NE(script.find("(check-sat)"), std::string::npos);
}

TEST(SmtLib, ParsesVerdicts) {
  EXPECT_TRUE(parse_smtlib2_verdict("sat\n").is_sat());
  EXPECT_TRUE(parse_smtlib2_verdict("\nunsat\n").is_unsat());
  EXPECT_TRUE(parse_smtlib2_verdict("unknown\n").is_unknown());
  EXPECT_THROW(parse_smtlib2_verdict("(error \"x\")\n"), SolverError);
}

TEST(SmtLib, TimeoutYieldsUnknown) {
  const SatResult r = check_sat(F("X < 3"), external("sleep 5", 200));
  ASSERT_TRUE(r.is_unknown());
  EXPECT_NE(r.reason().find("timeout"), std::string::npos);
}

TEST(SmtLib, UnknownPolicy) {
  SolverConfig strict = external("echo unknown");
  EXPECT_THROW(check_unsat(F("X < 3"), strict), SolverInconclusive);
  SolverConfig lenient = strict;
  lenient.unknown_policy = UnknownPolicy::AssumeUnsat;
  EXPECT_TRUE(check_unsat(F("X < 3"), lenient));
}

TEST(SmtLib, MissingOrBrokenSolver) {
  EXPECT_THROW(check_sat(F("X < 3"), external("no-such-solver-binary")), SolverError);
  EXPECT_THROW(check_sat(F("X < 3"), external("echo nonsense")), SolverError);
}

TEST(SmtLib, AgreesWithInternalSolver) {
  if (!have_z3()) GTEST_SKIP() << "z3 not on PATH";
  fixtures::Gen gen(33);
  Solver z3(external("z3 -in"));
  for (int i = 0; i < 150; ++i) {
    const Formula f = gen.formula(3);
    const SatResult r = z3.check_sat(f);
    ASSERT_FALSE(r.is_unknown()) << to_string(f);
    ASSERT_EQ(r.is_sat(), internal_sat(f)) << to_string(f);
  }
}

TEST(SmtLib, FailoverDecidesArithmetic) {
  if (!have_z3()) GTEST_SKIP() << "z3 not on PATH";
  SolverConfig cfg;
  cfg.external_command = "z3 -in";
  EXPECT_TRUE(check_unsat(F("X + X = 3"), cfg));
  EXPECT_TRUE(check_sat(F("2 * X = 4"), cfg).is_sat());
}

}  // namespace
}  // namespace sccpe
