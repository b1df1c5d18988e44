// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_TESTS_FIXTURES_HPP
#define SCCPE_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "sccpe/formula.hpp"
#include "sccpe/process.hpp"
#include "sccpe/state.hpp"

namespace sccpe::fixtures {

/// Annotated or bare formula text; bare identifiers are typed by position.
Formula F(std::string_view text);

/// The message-passing example: agent 0 relays W < Y to its child 2 after
/// agent 1's child 0 learns Y < 20.
enum class Variant : std::uint8_t {
  Base,
  /// tell(Z >= 10) becomes tell(Z >= 10) || tell(Z = 9).
  Conflict,
  /// tell(W < Y) becomes tell(Z > 9).
  Twin,
};

Process relay_process(Variant v = Variant::Base);
/// root: true, 0: X = 25, 1: true, 0 . 1: Y < 5.
std::vector<Obj> relay_stores();
/// The four stores plus the relay process at 0 . root.
SysState relay_system(Variant v = Variant::Base);

/// Surface form of the relay system: the process sits at root inside [ ]_0.
extern const char* const kRelayProgram;
/// Six independent lines with booleans, nested spaces and guarded recursion.
extern const char* const kGuardedProgram;

/// Parses, validates and elaborates; throws std::runtime_error with the
/// diagnostics when any Error is reported.
SysState load_program(std::string_view text);

/// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  /// Difference-logic fragment formula over X, Y, Z and B0, B1 with
  /// constants in [-8, 8].
  Formula formula(int depth);
  /// Single comparison or boolean literal.
  Formula atom();
  /// Small process over X, Y with agent and variable indices in {0, 1}.
  Process process(int depth);
  /// Normalized state with at most three process objects.
  SysState state();

 private:
  IntExpr operand();
  std::mt19937_64 rng_;
};

}  // namespace sccpe::fixtures

#endif  // SCCPE_TESTS_FIXTURES_HPP
