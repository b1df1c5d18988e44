// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_SEARCH_HPP
#define SCCPE_SEARCH_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "sccpe/solver.hpp"
#include "sccpe/state.hpp"

namespace sccpe {

struct Witness {
  AgentId aid;
  Formula store;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Some store is unsatisfiable.
struct InconsistentStore {};
/// Some store entails `tau`.
struct StoreEntails {
  Formula tau;
};
/// Two stores at distinct aids, neither the constant `true`, entail each other.
struct StoresEquivalent {};
/// User hook: every returned binding list is one match.
struct Predicate {
  std::function<std::vector<std::vector<Witness>>(const SysState&, Solver&)> test;
};

using Query = std::variant<InconsistentStore, StoreEntails, StoresEquivalent, Predicate>;

enum class SearchMode : std::uint8_t { AnyReachable, TerminalOnly };

struct SearchOptions {
  SearchMode mode = SearchMode::AnyReachable;
  std::size_t max_depth = 64;
  std::size_t max_solutions = std::numeric_limits<std::size_t>::max();
};

struct Match {
  SysState state;
  /// One entry for InconsistentStore/StoreEntails, two for StoresEquivalent.
  std::vector<Witness> witnesses;
  /// 0-based discovery index of the state.
  std::size_t state_index = 0;
  std::size_t depth = 0;
};

struct SearchOutcome {
  std::vector<Match> matches;
  std::size_t states_explored = 0;
  std::size_t depth_reached = 0;
  /// Stopped by max_depth or max_solutions with unexplored states left.
  bool truncated = false;
};

/// Binding lists satisfying `q` in the normalized state `s`, in canonical
/// store order.
std::vector<std::vector<Witness>> evaluate_query(const SysState& s, const Query& q, Solver& solver);
std::vector<std::vector<Witness>> evaluate_query(const SysState& s, const Query& q, const SolverConfig& config);

/// Breadth-first search from the normalized state `init`. A SolverInconclusive
/// raised while stepping or testing a state is rethrown with the state's key.
SearchOutcome search(const SysState& init, const Query& q, const SearchOptions& options, Solver& solver);
SearchOutcome search(const SysState& init, const Query& q, const SearchOptions& options,
                     const SolverConfig& config);

/// Distinct states reachable from `init` within `max_depth` steps, `init`
/// included.
std::size_t reachable_count(const SysState& init, std::size_t max_depth, const SolverConfig& config);

}  // namespace sccpe

#endif  // SCCPE_SEARCH_HPP
