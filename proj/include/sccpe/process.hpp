// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_PROCESS_HPP
#define SCCPE_PROCESS_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sccpe/formula.hpp"

namespace sccpe {

using Natural = std::uint64_t;

/// SCCP+E command. Immutable; copies share structure.
class Process {
 public:
  enum class Kind : std::uint8_t { Nil, Tell, Ask, Par, Space, Rec, Extr, Var };

  /// The nil process.
  Process();

  static Process nil() { return Process(); }
  static Process tell(Formula c);
  static Process ask(Formula guard, Process body);
  static Process par(Process a, Process b);
  /// Parallel composition of at least two operands, kept as given.
  static Process par(std::vector<Process> operands);
  /// `[body]_agent`: body runs in the space of child `agent`.
  static Process space(Natural agent, Process body);
  static Process rec(Natural var, Process body);
  /// `x(body)_agent`: body moves from the space of `agent` to its parent.
  static Process extr(Natural agent, Process body);
  static Process var(Natural index);

  Kind kind() const;
  /// Tell constraint or Ask guard.
  const Formula& constraint() const;
  /// Body of Ask/Space/Rec/Extr.
  const Process& body() const;
  /// Operands of Par.
  std::span<const Process> operands() const;
  /// Agent of Space/Extr, variable of Rec/Var.
  Natural index() const;

  friend std::strong_ordering operator<=>(const Process& a, const Process& b);
  friend bool operator==(const Process& a, const Process& b);

 private:
  struct Node;
  explicit Process(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Canonical form: formulas canonicalized, Par chains flattened and their
/// operands sorted by the term order.
Process canonicalize(const Process& p);

/// Operands of the flattened top-level Par chain (the process itself if it is
/// not a Par).
std::vector<Process> par_operands(const Process& p);

/// Substitutes `q` for every `v(n)`, without descending into `rec` subterms.
Process replace(const Process& p, Natural n, const Process& q);

/// Rewriting-notation rendering: `xtr(0, < 1 >[tell(Z:Integer >= 10) || ...])`.
std::string to_string(const Process& p);
std::ostream& operator<<(std::ostream& os, const Process& p);

}  // namespace sccpe

#endif  // SCCPE_PROCESS_HPP
