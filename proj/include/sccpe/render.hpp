// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_RENDER_HPP
#define SCCPE_RENDER_HPP

#include <string>

#include "sccpe/process.hpp"
#include "sccpe/state.hpp"

namespace sccpe {

/// Surface-style process text with unannotated formulas, `0` for nil.
std::string to_display_string(const Process& p);

/// Indented tree of spaces, two spaces per level:
///
///   root: true
///     0: X = 25
///       | [tell(W < Y)]_2
///
/// Children are sorted by agent index; an aid that only hosts processes is
/// shown with store `true`.
std::string render_tree(const SysState& s);

}  // namespace sccpe

#endif  // SCCPE_RENDER_HPP
