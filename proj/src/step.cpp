// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sccpe/step.hpp"

#include <map>
#include <unordered_set>

namespace sccpe {

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::Tell: return "tell";
    case Rule::Ask: return "ask";
    case Rule::Parallel: return "parallel";
    case Rule::Space: return "space";
    case Rule::Recursion: return "recursion";
    case Rule::Extrusion: return "extrusion";
  }
  return "?";
}

namespace {

std::vector<Obj> without(const std::vector<Obj>& objects, std::size_t i) {
  std::vector<Obj> out;
  out.reserve(objects.size() + 2);
  for (std::size_t j = 0; j < objects.size(); ++j) {
    if (j != i) out.push_back(objects[j]);
  }
  return out;
}

std::ptrdiff_t find_store(const std::vector<Obj>& objects, const AgentId& aid) {
  for (std::size_t j = 0; j < objects.size(); ++j) {
    if (const auto* st = std::get_if<StoreObj>(&objects[j]); st && st->aid == aid) {
      return static_cast<std::ptrdiff_t>(j);
    }
  }
  return -1;
}

}  // namespace

std::vector<Transition> transitions(const SysState& s, Solver& solver) {
  std::vector<Transition> out;
  const auto& objects = s.objects();
  auto emit = [&](Rule rule, std::size_t i, std::vector<Obj> next) {
    out.push_back(Transition{rule, i, normalize(SysState(std::move(next)))});
  };

  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto* proc = std::get_if<ProcObj>(&objects[i]);
    if (!proc) continue;
    const AgentId& here = proc->aid;
    const Process& p = proc->program;
    const std::ptrdiff_t store = find_store(objects, here);

    switch (p.kind()) {
      case Process::Kind::Tell: {
        if (store < 0) break;
        std::vector<Obj> next = without(objects, i);
        const std::size_t at = static_cast<std::size_t>(store) - (static_cast<std::size_t>(store) > i ? 1 : 0);
        auto& st = std::get<StoreObj>(next[at]);
        st.constraint = conjoin(st.constraint, p.constraint());
        emit(Rule::Tell, i, std::move(next));
        break;
      }
      case Process::Kind::Ask: {
        if (store < 0) break;
        const Formula& local = std::get<StoreObj>(objects[static_cast<std::size_t>(store)]).constraint;
        if (!solver.entails(local, p.constraint())) break;
        std::vector<Obj> next = without(objects, i);
        next.emplace_back(ProcObj{here, p.body()});
        emit(Rule::Ask, i, std::move(next));
        break;
      }
      case Process::Kind::Par: {
        const std::vector<Process> ops = par_operands(p);
        for (std::size_t k = 0; k < ops.size(); ++k) {
          std::vector<Process> rest;
          for (std::size_t m = 0; m < ops.size(); ++m) {
            if (m != k) rest.push_back(ops[m]);
          }
          std::vector<Obj> next = without(objects, i);
          next.emplace_back(ProcObj{here, ops[k]});
          next.emplace_back(ProcObj{here, rest.size() == 1 ? rest.front() : Process::par(std::move(rest))});
          emit(Rule::Parallel, i, std::move(next));
        }
        break;
      }
      case Process::Kind::Space: {
        // The rule's left-hand side also matches the parent's store.
        if (store < 0) break;
        const AgentId inner = here.child(p.index());
        std::vector<Obj> next = without(objects, i);
        next.emplace_back(ProcObj{inner, p.body()});
        next.emplace_back(StoreObj{inner, Formula::truth()});
        emit(Rule::Space, i, std::move(next));
        break;
      }
      case Process::Kind::Rec: {
        std::vector<Obj> next = without(objects, i);
        next.emplace_back(ProcObj{here, replace(p.body(), p.index(), p)});
        emit(Rule::Recursion, i, std::move(next));
        break;
      }
      case Process::Kind::Extr: {
        if (here.is_root() || here.innermost() != p.index()) break;
        std::vector<Obj> next = without(objects, i);
        next.emplace_back(ProcObj{here.parent(), p.body()});
        emit(Rule::Extrusion, i, std::move(next));
        break;
      }
      case Process::Kind::Nil:
      case Process::Kind::Var:
        break;
    }
  }
  return out;
}

std::vector<SysState> step(const SysState& s, Solver& solver) {
  std::map<std::string, SysState> distinct;
  for (Transition& t : transitions(s, solver)) distinct.try_emplace(canonical_key(t.target), std::move(t.target));
  std::vector<SysState> out;
  out.reserve(distinct.size());
  for (auto& [key, state] : distinct) out.push_back(std::move(state));
  return out;
}

std::vector<SysState> step(const SysState& s, const SolverConfig& config) {
  Solver solver(config);
  return step(s, solver);
}

RunResult run(const SysState& s, Solver& solver, std::size_t max_steps) {
  RunResult result;
  std::unordered_set<std::string> visited{canonical_key(s)};
  std::vector<SysState> frontier{s};
  for (std::size_t depth = 0; !frontier.empty(); ++depth) {
    std::vector<SysState> next;
    for (const SysState& state : frontier) {
      ++result.states_explored;
      std::vector<SysState> succ = step(state, solver);
      if (succ.empty()) {
        result.terminals.push_back(state);
        continue;
      }
      if (depth >= max_steps) {
        result.bound_hit = true;
        continue;
      }
      for (SysState& t : succ) {
        if (visited.insert(canonical_key(t)).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return result;
}

RunResult run(const SysState& s, const SolverConfig& config, std::size_t max_steps) {
  Solver solver(config);
  return run(s, solver, max_steps);
}

}  // namespace sccpe
