// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_STEP_HPP
#define SCCPE_STEP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "sccpe/solver.hpp"
#include "sccpe/state.hpp"

namespace sccpe {

enum class Rule : std::uint8_t { Tell, Ask, Parallel, Space, Recursion, Extrusion };

const char* rule_name(Rule rule);

struct Transition {
  Rule rule;
  std::size_t object;  // index of the rewritten process object in the source
  SysState target;     // normalized
};

/// Every single rule application to one process object of a normalized state,
/// before identifying equal targets.
std::vector<Transition> transitions(const SysState& s, Solver& solver);

/// Distinct successors of a normalized state, ordered by canonical key.
std::vector<SysState> step(const SysState& s, Solver& solver);
std::vector<SysState> step(const SysState& s, const SolverConfig& config);

struct RunResult {
  /// Reachable successor-free states, in discovery order.
  std::vector<SysState> terminals;
  /// Some state at the depth bound still had successors.
  bool bound_hit = false;
  std::size_t states_explored = 0;
};

/// Exhaustive breadth-first exploration up to `max_steps` transitions deep.
RunResult run(const SysState& s, Solver& solver, std::size_t max_steps);
RunResult run(const SysState& s, const SolverConfig& config, std::size_t max_steps);

}  // namespace sccpe

#endif  // SCCPE_STEP_HPP
