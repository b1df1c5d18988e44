// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_SMTLIB_HPP
#define SCCPE_SMTLIB_HPP

#include <string>

#include "sccpe/formula.hpp"
#include "sccpe/solver.hpp"

namespace sccpe {

/// SMT-LIB2 term for a formula. Variables are emitted as quoted symbols.
std::string to_smtlib2_term(const Formula& c);

/// Complete QF_LIA script: set-logic, one declare-const per free variable,
/// one assert, check-sat.
std::string to_smtlib2_script(const Formula& c);

/// Reads the first `sat` / `unsat` / `unknown` line a solver prints.
/// Throws SolverError on anything else.
SatResult parse_smtlib2_verdict(const std::string& output);

/// Runs `command` through /bin/sh with `script` on its standard input.
/// Returns Unknown("timeout") when no verdict arrives within `timeout_ms`;
/// throws SolverError when the process cannot be run or answers garbage.
SatResult run_smtlib2(const std::string& command, const std::string& script, int timeout_ms);

}  // namespace sccpe

#endif  // SCCPE_SMTLIB_HPP
