// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <functional>
#include <map>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "sccpe/error.hpp"
#include "sccpe/formula_io.hpp"
#include "sccpe/solver.hpp"
#include "sccpe/step.hpp"

namespace sccpe {
namespace {

using fixtures::F;

const AgentId kRoot = AgentId::root();

SysState make(std::vector<Obj> objs) { return normalize(SysState(std::move(objs))); }

std::vector<std::string> keys(const std::vector<SysState>& states) {
  std::vector<std::string> out;
  for (const SysState& s : states) out.push_back(canonical_key(s));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(AgentId, PathsAndPrinting) {
  const AgentId a = AgentId::root().child(1).child(0);
  EXPECT_EQ(a.to_string(), "0 . 1 . root");
  EXPECT_EQ(a.innermost(), 0U);
  EXPECT_EQ(a.parent(), AgentId({1}));
  EXPECT_TRUE(is_prefix(AgentId({1}), a));
  EXPECT_TRUE(is_prefix(kRoot, a));
  EXPECT_FALSE(is_prefix(AgentId({0}), a));
  EXPECT_THROW(kRoot.parent(), Error);
}

TEST(Normalize, MergesStoresAndDropsNil) {
  const SysState s = normalize(SysState({StoreObj{kRoot, F("X > 1")}, ProcObj{kRoot, Process::nil()},
                                         StoreObj{kRoot, F("Y > 1")}, StoreObj{kRoot, Formula::truth()}}));
  ASSERT_EQ(s.size(), 1U);
  EXPECT_EQ(*s.store(kRoot), canonicalize(F("X > 1 and Y > 1")));
  EXPECT_TRUE(is_normalized(s));
}

TEST(Normalize, IdempotentAndPermutationInvariant) {
  fixtures::Gen gen(41);
  for (int i = 0; i < 600; ++i) {
    const SysState s = gen.state();
    ASSERT_TRUE(is_normalized(s));
    ASSERT_EQ(normalize(s), s);
    std::vector<Obj> objs = s.objects();
    // Split one store into two objects and shuffle everything.
    if (!objs.empty() && std::holds_alternative<StoreObj>(objs[0])) {
      const auto st = std::get<StoreObj>(objs[0]);
      objs.emplace_back(StoreObj{st.aid, Formula::truth()});
      objs.emplace_back(StoreObj{st.aid, st.constraint});
    }
    std::shuffle(objs.begin(), objs.end(), gen.rng());
    ASSERT_EQ(canonical_key(normalize(SysState(objs))), canonical_key(s));
  }
}

TEST(Step, TellConjoinsIntoTheLocalStore) {
  const auto succ = step(make({StoreObj{kRoot, F("X > 1")}, ProcObj{kRoot, Process::tell(F("Y < 2"))}}), {});
  ASSERT_EQ(succ.size(), 1U);
  EXPECT_EQ(succ[0], make({StoreObj{kRoot, F("X > 1 and Y < 2")}}));
}

TEST(Step, TellAndAskNeedALocalStore) {
  const SysState s = make({StoreObj{kRoot, Formula::truth()}, ProcObj{AgentId({3}), Process::tell(F("X > 1"))},
                           ProcObj{AgentId({3}), Process::ask(Formula::truth(), Process::tell(F("X > 1")))}});
  EXPECT_TRUE(step(s, {}).empty());
}

TEST(Step, AskFiresOnlyWhenEntailed) {
  const Process body = Process::tell(F("B0"));
  const SysState yes = make({StoreObj{kRoot, F("Y < 5")}, ProcObj{kRoot, Process::ask(F("Y < 20"), body)}});
  const auto succ = step(yes, {});
  ASSERT_EQ(succ.size(), 1U);
  EXPECT_EQ(succ[0], make({StoreObj{kRoot, F("Y < 5")}, ProcObj{kRoot, body}}));
  const SysState no = make({StoreObj{kRoot, F("Y < X")}, ProcObj{kRoot, Process::ask(F("Y < 3"), body)}});
  EXPECT_TRUE(step(no, {}).empty());
}

TEST(Step, ParallelSplitsOffEachOperand) {
  const Process a = Process::tell(F("X > 1"));
  const Process b = Process::tell(F("X > 2"));
  const Process c = Process::tell(F("X > 3"));
  const SysState s = make({ProcObj{kRoot, Process::par({a, b, c})}});
  const auto succ = step(s, {});
  ASSERT_EQ(succ.size(), 3U);
  const SysState expected = make({ProcObj{kRoot, a}, ProcObj{kRoot, Process::par(b, c)}});
  EXPECT_NE(std::find(succ.begin(), succ.end(), expected), succ.end());
}

TEST(Step, SpaceOpensAChildWithATrueStore) {
  const Process body = Process::tell(F("X > 1"));
  const SysState s = make({StoreObj{kRoot, Formula::truth()}, ProcObj{kRoot, Process::space(2, body)}});
  const auto succ = step(s, {});
  ASSERT_EQ(succ.size(), 1U);
  EXPECT_EQ(succ[0], make({StoreObj{kRoot, Formula::truth()}, StoreObj{AgentId({2}), Formula::truth()},
                           ProcObj{AgentId({2}), body}}));
  // An existing child store absorbs the new `true`.
  const SysState existing = make({StoreObj{kRoot, Formula::truth()}, StoreObj{AgentId({2}), F("Y > 0")},
                                  ProcObj{kRoot, Process::space(2, body)}});
  EXPECT_EQ(*step(existing, {})[0].store(AgentId({2})), F("Y > 0"));
  // Without a store at the process's own aid the rule does not match.
  EXPECT_TRUE(step(make({ProcObj{kRoot, Process::space(2, body)}}), {}).empty());
}

TEST(Step, RecursionUnfoldsOnce) {
  const Process rec = Process::rec(1, Process::ask(F("X > 0"), Process::var(1)));
  const auto succ = step(make({ProcObj{kRoot, rec}}), {});
  ASSERT_EQ(succ.size(), 1U);
  EXPECT_EQ(succ[0], make({ProcObj{kRoot, Process::ask(F("X > 0"), rec)}}));
}

TEST(Step, ReplaceStopsAtNestedBinders) {
  const Process inner = Process::rec(2, Process::var(1));
  const Process p = Process::par(Process::var(1), inner);
  EXPECT_EQ(replace(p, 1, Process::tell(F("B0"))), Process::par(Process::tell(F("B0")), inner));
}

TEST(Step, ExtrusionMovesToTheParentOnlyFromTheNamedAgent) {
  const Process body = Process::tell(F("X > 1"));
  const auto succ = step(make({ProcObj{AgentId({0, 1}), Process::extr(0, body)}}), {});
  ASSERT_EQ(succ.size(), 1U);
  EXPECT_EQ(succ[0], make({ProcObj{AgentId({1}), body}}));
  EXPECT_TRUE(step(make({ProcObj{AgentId({0, 1}), Process::extr(1, body)}}), {}).empty());
  EXPECT_TRUE(step(make({ProcObj{kRoot, Process::extr(0, body)}}), {}).empty());
}

TEST(Step, TransitionsCarryRuleNames) {
  const SysState s = fixtures::relay_system();
  Solver solver;
  const auto ts = transitions(s, solver);
  ASSERT_EQ(ts.size(), 1U);
  EXPECT_EQ(ts[0].rule, Rule::Extrusion);
  EXPECT_STREQ(rule_name(ts[0].rule), "extrusion");
}

TEST(Step, AgreesWithBruteForceEnumerator) {
  fixtures::Gen gen(42);
  Solver solver;
  int nonempty = 0;
  for (int i = 0; i < 400; ++i) {
    const SysState s = gen.state();
    const auto mine = step(s, solver);
    const auto theirs = oracle::successors(s);
    ASSERT_EQ(keys(mine), keys(theirs)) << canonical_key(s);
    nonempty += mine.empty() ? 0 : 1;
    for (const SysState& t : mine) ASSERT_TRUE(is_normalized(t));
  }
  EXPECT_GT(nonempty, 200);
}

TEST(Step, StoresOnlyGrow) {
  for (const SysState& init : {fixtures::relay_system(), fixtures::relay_system(fixtures::Variant::Conflict),
                               fixtures::load_program(fixtures::kGuardedProgram)}) {
    Solver solver;
    std::map<std::string, SysState> seen;
    std::vector<SysState> todo{init};
    while (!todo.empty()) {
      SysState s = todo.back();
      todo.pop_back();
      if (!seen.emplace(canonical_key(s), s).second) continue;
      for (const Transition& t : transitions(s, solver)) {
        for (const StoreObj& old : s.stores()) {
          const auto now = t.target.store(old.aid);
          ASSERT_TRUE(now.has_value());
          ASSERT_TRUE(solver.entails(*now, old.constraint)) << canonical_key(s);
        }
        todo.push_back(t.target);
      }
    }
  }
}

TEST(Run, RelayReachesTheExpectedFinalState) {
  const RunResult r = run(fixtures::relay_system(), SolverConfig{}, 64);
  EXPECT_FALSE(r.bound_hit);
  EXPECT_EQ(r.states_explored, 19U);
  ASSERT_EQ(r.terminals.size(), 1U);
  const SysState expected = make({StoreObj{kRoot, Formula::truth()}, StoreObj{AgentId({0}), F("X = 25")},
                                  StoreObj{AgentId({1}), F("Z >= 10")}, StoreObj{AgentId({0, 1}), F("Y < 5")},
                                  StoreObj{AgentId({2, 0}), F("W < Y")}});
  EXPECT_EQ(r.terminals[0], expected);
}

TEST(Run, FollowsTheStepByStepRelayTrace) {
  // Space, extrusion, space, parallel, tell, space, ask, two extrusions,
  // two spaces, tell.
  const std::vector<Rule> trace{Rule::Space,     Rule::Extrusion, Rule::Space,     Rule::Parallel,
                                Rule::Tell,      Rule::Space,     Rule::Ask,       Rule::Extrusion,
                                Rule::Extrusion, Rule::Space,     Rule::Space,     Rule::Tell};
  const SysState init = fixtures::load_program(fixtures::kRelayProgram);
  const SysState final_state = run(init, SolverConfig{}, 64).terminals.at(0);
  Solver solver;
  std::function<bool(const SysState&, std::size_t)> follow = [&](const SysState& s, std::size_t i) {
    if (i == trace.size()) return s == final_state;
    for (const Transition& t : transitions(s, solver)) {
      if (t.rule == trace[i] && follow(t.target, i + 1)) return true;
    }
    return false;
  };
  EXPECT_TRUE(follow(init, 0));
}

TEST(Run, ReportsTheDepthBound) {
  const Process grow = Process::rec(0, Process::space(0, Process::var(0)));
  const SysState s = make({StoreObj{kRoot, Formula::truth()}, ProcObj{kRoot, grow}});
  const RunResult r = run(s, SolverConfig{}, 10);
  EXPECT_TRUE(r.bound_hit);
  EXPECT_TRUE(r.terminals.empty());
}

}  // namespace
}  // namespace sccpe
