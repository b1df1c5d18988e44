// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sccpe/search.hpp"

#include <unordered_set>

#include "sccpe/error.hpp"
#include "sccpe/step.hpp"

namespace sccpe {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::vector<std::vector<Witness>> evaluate_query(const SysState& s, const Query& q, Solver& solver) {
  const std::vector<StoreObj> stores = s.stores();
  std::vector<std::vector<Witness>> out;
  std::visit(Overloaded{
                 [&](const InconsistentStore&) {
                   for (const StoreObj& st : stores) {
                     if (solver.check_unsat(st.constraint)) out.push_back({Witness{st.aid, st.constraint}});
                   }
                 },
                 [&](const StoreEntails& e) {
                   for (const StoreObj& st : stores) {
                     if (solver.entails(st.constraint, e.tau)) out.push_back({Witness{st.aid, st.constraint}});
                   }
                 },
                 [&](const StoresEquivalent&) {
                   // Excluding `true` is syntactic: the constant, not every valid formula.
                   for (std::size_t i = 0; i < stores.size(); ++i) {
                     if (stores[i].constraint.is_true()) continue;
                     for (std::size_t j = 0; j < stores.size(); ++j) {
                       if (i == j || stores[j].constraint.is_true()) continue;
                       const Formula& a = stores[i].constraint;
                       const Formula& b = stores[j].constraint;
                       if (solver.entails(a, b) && solver.entails(b, a)) {
                         out.push_back({Witness{stores[i].aid, a}, Witness{stores[j].aid, b}});
                       }
                     }
                   }
                 },
                 [&](const Predicate& p) {
                   if (p.test) out = p.test(s, solver);
                 },
             },
             q);
  return out;
}

std::vector<std::vector<Witness>> evaluate_query(const SysState& s, const Query& q, const SolverConfig& config) {
  Solver solver(config);
  return evaluate_query(s, q, solver);
}

SearchOutcome search(const SysState& init, const Query& q, const SearchOptions& options, Solver& solver) {
  SearchOutcome outcome;
  struct Entry {
    SysState state;
    std::size_t index;
  };
  std::unordered_set<std::string> visited{canonical_key(init)};
  std::vector<Entry> frontier{{init, 0}};
  std::size_t discovered = 1;

  for (std::size_t depth = 0; !frontier.empty(); ++depth) {
    outcome.depth_reached = depth;
    std::vector<Entry> next;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      const Entry& entry = frontier[f];
      if (outcome.matches.size() >= options.max_solutions) {
        outcome.truncated = true;
        return outcome;
      }
      ++outcome.states_explored;
      std::vector<SysState> succ;
      std::vector<std::vector<Witness>> found;
      try {
        succ = step(entry.state, solver);
        if (options.mode == SearchMode::AnyReachable || succ.empty()) found = evaluate_query(entry.state, q, solver);
      } catch (const SolverInconclusive& e) {
        throw SolverInconclusive(std::string(e.what()) + " in state " + canonical_key(entry.state));
      }
      for (auto& w : found) {
        if (outcome.matches.size() >= options.max_solutions) {
          outcome.truncated = true;
          return outcome;
        }
        outcome.matches.push_back(Match{entry.state, std::move(w), entry.index, depth});
      }
      if (depth >= options.max_depth) {
        if (!succ.empty()) outcome.truncated = true;
        continue;
      }
      for (SysState& t : succ) {
        if (visited.insert(canonical_key(t)).second) next.push_back(Entry{std::move(t), discovered++});
      }
    }
    frontier = std::move(next);
  }
  return outcome;
}

SearchOutcome search(const SysState& init, const Query& q, const SearchOptions& options,
                     const SolverConfig& config) {
  Solver solver(config);
  return search(init, q, options, solver);
}

std::size_t reachable_count(const SysState& init, std::size_t max_depth, const SolverConfig& config) {
  SearchOptions options;
  options.max_depth = max_depth;
  Solver solver(config);
  return search(init, Predicate{}, options, solver).states_explored;
}

}  // namespace sccpe
