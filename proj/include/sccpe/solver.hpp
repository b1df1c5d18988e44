// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_SOLVER_HPP
#define SCCPE_SOLVER_HPP

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>

#include "sccpe/dnf.hpp"
#include "sccpe/formula.hpp"

namespace sccpe {

class SatResult {
 public:
  enum class Verdict : std::uint8_t { Sat, Unsat, Unknown };

  static SatResult sat() { return SatResult(Verdict::Sat, {}); }
  static SatResult unsat() { return SatResult(Verdict::Unsat, {}); }
  static SatResult unknown(std::string reason) { return SatResult(Verdict::Unknown, std::move(reason)); }

  Verdict verdict() const { return verdict_; }
  bool is_sat() const { return verdict_ == Verdict::Sat; }
  bool is_unsat() const { return verdict_ == Verdict::Unsat; }
  bool is_unknown() const { return verdict_ == Verdict::Unknown; }
  /// Only meaningful for Unknown.
  const std::string& reason() const { return reason_; }

  friend bool operator==(const SatResult&, const SatResult&) = default;

 private:
  SatResult(Verdict v, std::string reason) : verdict_(v), reason_(std::move(reason)) {}
  Verdict verdict_;
  std::string reason_;
};

inline constexpr std::size_t kDefaultBranchLimit = std::size_t{1} << 20;

enum class Backend : std::uint8_t { Internal, External };

/// What `check_unsat` makes of an Unknown verdict. AssumeUnsat treats it as
/// "not satisfiable", which lets `entails` succeed on a timeout.
enum class UnknownPolicy : std::uint8_t { Error, AssumeUnsat };

struct SolverConfig {
  Backend backend = Backend::Internal;
  /// Shell command of an SMT-LIB2 solver reading a script on stdin, e.g.
  /// `z3 -in`. With the Internal backend it is the failover for formulas
  /// outside the fragment; empty means no failover.
  std::string external_command;
  int timeout_ms = 5000;
  UnknownPolicy unknown_policy = UnknownPolicy::Error;
  /// Case splits the internal procedure may make before giving up.
  std::size_t branch_limit = kDefaultBranchLimit;
};

/// Negative-cycle test on the constraint graph of a conjunction of difference
/// constraints; bounds are edges to a distinguished zero vertex.
bool dl_conjunct_sat(std::span<const DLAtom> atoms);

/// Internal decision procedure: depth-first case splitting over the boolean
/// structure, pruning every partial conjunct with the negative-cycle test.
/// Throws FragmentUnsupported outside the fragment, or DnfLimitExceeded after
/// `branch_limit` case splits.
bool internal_sat(const Formula& c, std::size_t branch_limit = kDefaultBranchLimit);

/// Solver session: configuration plus a verdict cache. One session serves one
/// query at a time.
class Solver {
 public:
  explicit Solver(SolverConfig config = {});

  SatResult check_sat(const Formula& c);
  /// Throws SolverInconclusive on Unknown unless the policy is AssumeUnsat.
  bool check_unsat(const Formula& c);
  /// c entails d iff c and not(d) is unsatisfiable.
  bool entails(const Formula& c, const Formula& d);

  const SolverConfig& config() const { return config_; }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  SatResult decide(const Formula& c);

  SolverConfig config_;
  std::unordered_map<std::string, SatResult> cache_;
};

SatResult check_sat(const Formula& c, const SolverConfig& config = {});
bool check_unsat(const Formula& c, const SolverConfig& config = {});
bool entails(const Formula& c, const Formula& d, const SolverConfig& config = {});

}  // namespace sccpe

#endif  // SCCPE_SOLVER_HPP
