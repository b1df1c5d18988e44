// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_FORMULA_IO_HPP
#define SCCPE_FORMULA_IO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "sccpe/formula.hpp"

namespace sccpe {

/// Declared sorts for unannotated identifiers.
using SortEnv = std::map<std::string, Sort, std::less<>>;

/// Concrete syntax with sort annotations, e.g. `X:Integer === 25 and not(B:Boolean)`.
/// Reads back through `read_formula` to the identical term.
std::string to_string(const Formula& f);
std::string to_string(const IntExpr& e);

/// Annotation-free rendering for trees and logs, e.g. `X = 25 and B0`.
std::string to_display_string(const Formula& f);

/// Reads the annotated syntax. Also accepts bare identifiers, typed through
/// `env` when given and otherwise by position (operands of comparisons and
/// arithmetic are Int, everything else Bool), and the surface operators
/// `=` / `=/=` as synonyms of `===` / `=/==`. Throws ParseError.
Formula read_formula(std::string_view text, const SortEnv* env = nullptr);

std::ostream& operator<<(std::ostream& os, const Formula& f);
std::ostream& operator<<(std::ostream& os, const IntExpr& e);

}  // namespace sccpe

#endif  // SCCPE_FORMULA_IO_HPP
