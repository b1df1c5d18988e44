// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include "fixtures.hpp"

#include <stdexcept>

#include "sccpe/formula_io.hpp"
#include "sccpe/lang.hpp"

namespace sccpe::fixtures {

Formula F(std::string_view text) { return read_formula(text); }

Process relay_process(Variant v) {
  const Process inner_tell = v == Variant::Twin ? Process::tell(F("Z > 9")) : Process::tell(F("W < Y"));
  const Process relay =
      Process::ask(F("Y < 20"), Process::extr(0, Process::extr(1, Process::space(0, Process::space(2, inner_tell)))));
  Process first = Process::tell(F("Z >= 10"));
  if (v == Variant::Conflict) first = Process::par(first, Process::tell(F("Z === 9")));
  return Process::extr(0, Process::space(1, Process::par(first, Process::space(0, relay))));
}

std::vector<Obj> relay_stores() {
  return {StoreObj{AgentId::root(), Formula::truth()}, StoreObj{AgentId({0}), F("X === 25")},
          StoreObj{AgentId({1}), Formula::truth()}, StoreObj{AgentId({0, 1}), F("Y < 5")}};
}

SysState relay_system(Variant v) {
  std::vector<Obj> objs = relay_stores();
  objs.emplace_back(ProcObj{AgentId({0}), relay_process(v)});
  return normalize(SysState(std::move(objs)));
}

const char* const kRelayProgram = R"(var W, X, Y, Z Int
begin
root ; true .
0 . root ; X = 25 .
1 . root ; true .
0 . 1 . root ; Y < 5 .
[ x( [tell(Z >= 10) || [ask Y < 20 -> x( x( [ [tell(W < Y)]_2 ]_0 
)_1 )_0 ]_0 ]_1 )_0 ]_0 .
end
)";

const char* const kGuardedProgram = R"(var B0, B1 Bool
var X, C Int
var Y, B Int
begin
ask true -> tell(X >= 5) .
[ [tell(B0)]_1 || tell(Y < X) ]_1 .
ask X > 1 -> tell(B1) .
[tell(X >= 5)]_2 .
ask B1 -> [ [tell(C =/= 5) ]_1 ]_1 .
[ask Y < 3 -> r(1,v(1) || tell(false)) ]_1 .
end
)";

SysState load_program(std::string_view text) {
  const lang::ParseResult parsed = lang::parse(text);
  std::vector<lang::Diagnostic> diags = parsed.diagnostics;
  if (parsed.ast) {
    auto more = lang::validate(*parsed.ast);
    diags.insert(diags.end(), more.begin(), more.end());
  }
  if (!parsed.ast || lang::has_errors(diags)) {
    std::string msg;
    for (const auto& d : diags) msg += lang::format_diagnostic(d, "<program>") + '\n';
    throw std::runtime_error(msg);
  }
  return lang::elaborate(*parsed.ast);
}

IntExpr Gen::operand() {
  static const char* const kInts[] = {"X", "Y", "Z"};
  if (chance(0.6)) return IntExpr::var(kInts[uniform(0, 2)]);
  return IntExpr::lit(uniform(-8, 8));
}

Formula Gen::atom() {
  static const char* const kBools[] = {"B0", "B1"};
  static const Op kCmp[] = {Op::Lt, Op::Le, Op::Gt, Op::Ge, Op::IntEq, Op::IntNe};
  const int pick = uniform(0, 9);
  if (pick == 0) return Formula::var(kBools[uniform(0, 1)]);
  if (pick == 1 && chance(0.3)) return Formula::constant(chance(0.5));
  return Formula::compare(kCmp[uniform(0, 5)], operand(), operand());
}

Formula Gen::formula(int depth) {
  if (depth <= 0 || chance(0.3)) return atom();
  switch (uniform(0, 5)) {
    case 0:
      return Formula::not_(formula(depth - 1));
    case 1:
    case 2: {
      std::vector<Formula> parts;
      const int n = uniform(2, 3);
      for (int i = 0; i < n; ++i) parts.push_back(formula(depth - 1));
      return Formula::and_(std::move(parts));
    }
    case 3:
      return Formula::or_({formula(depth - 1), formula(depth - 1)});
    case 4:
      return Formula::implies(formula(depth - 1), formula(depth - 1));
    default:
      return Formula::xor_(formula(depth - 1), formula(depth - 1));
  }
}

Process Gen::process(int depth) {
  auto small = [&] {
    static const char* const kForms[] = {"X > 0", "X < 3", "Y = X", "Y >= 2", "X = 1", "true", "false", "B0"};
    return F(kForms[uniform(0, 7)]);
  };
  if (depth <= 0) {
    const int pick = uniform(0, 5);
    if (pick == 0) return Process::var(static_cast<Natural>(uniform(0, 1)));
    if (pick == 1) return Process::nil();
    return Process::tell(small());
  }
  const auto index = [&] { return static_cast<Natural>(uniform(0, 1)); };
  switch (uniform(0, 6)) {
    case 0: return Process::tell(small());
    case 1: return Process::ask(small(), process(depth - 1));
    case 2: return Process::par(process(depth - 1), process(depth - 1));
    case 3: return Process::space(index(), process(depth - 1));
    case 4: return Process::extr(index(), process(depth - 1));
    case 5: return Process::rec(index(), Process::ask(small(), process(depth - 1)));
    default: return Process::par({process(depth - 1), process(0), process(0)});
  }
}

SysState Gen::state() {
  static const std::vector<std::vector<Natural>> kAids = {{}, {0}, {1}, {0, 0}, {1, 0}};
  std::vector<Obj> objs;
  for (const auto& path : kAids) {
    if (chance(path.empty() ? 0.9 : 0.5)) objs.emplace_back(StoreObj{AgentId(path), formula(1)});
  }
  const int procs = uniform(1, 3);
  for (int i = 0; i < procs; ++i) {
    objs.emplace_back(ProcObj{AgentId(kAids[static_cast<std::size_t>(uniform(0, 4))]), process(uniform(1, 3))});
  }
  return normalize(SysState(std::move(objs)));
}

}  // namespace sccpe::fixtures
