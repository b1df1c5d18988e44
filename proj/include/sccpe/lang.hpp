// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_LANG_HPP
#define SCCPE_LANG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sccpe/formula.hpp"
#include "sccpe/process.hpp"
#include "sccpe/state.hpp"

namespace sccpe::lang {

/// 1-based line and column (bytes).
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Diagnostic {
  enum class Severity : std::uint8_t { Error, Warning };
  Severity severity = Severity::Error;
  SourcePos pos;
  std::string message;
};

/// `file:line:col: error: message`
std::string format_diagnostic(const Diagnostic& d, std::string_view file);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

struct VarDecl {
  std::vector<std::string> names;
  Sort sort = Sort::Int;
  SourcePos pos;
};

/// `0 . 1 . root ; Y < 5` has location {0, 1}.
struct AgentDecl {
  std::vector<Natural> location;  // innermost first
  Formula constraint;
};

struct ProcessLine {
  Process program;
};

struct Line {
  std::variant<AgentDecl, ProcessLine> item;
  SourcePos pos;
};

struct ProgramAst {
  std::vector<VarDecl> var_decls;
  std::vector<Line> lines;
};

/// Equality ignoring source positions.
bool structurally_equal(const ProgramAst& a, const ProgramAst& b);

struct ParseResult {
  std::optional<ProgramAst> ast;  // set iff no Error was reported
  std::vector<Diagnostic> diagnostics;
};

/// Reads the surface language. Beyond the grammar it accepts `--` line
/// comments, CRLF line ends and `( P )` grouping of processes. `||` is right
/// associative and an ask body extends as far right as possible.
ParseResult parse(std::string_view text);

/// Unbound or undeclared names are Errors; recursion variables reachable
/// without passing a guarding ask are Warnings.
std::vector<Diagnostic> validate(const ProgramAst& ast);

/// Initial state of a validated program. Adds a `true` store for the root and
/// for every undeclared ancestor of a declared location.
SysState elaborate(const ProgramAst& ast);

/// Surface text of `ast`; `parse` reads it back to a structurally equal AST.
/// Throws Error for a nil process or a constraint outside the surface syntax.
std::string print_program(const ProgramAst& ast);
std::string print_process(const Process& p);
std::string print_constraint(const Formula& f);

}  // namespace sccpe::lang

#endif  // SCCPE_LANG_HPP
