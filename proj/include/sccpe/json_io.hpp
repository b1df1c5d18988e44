// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_JSON_IO_HPP
#define SCCPE_JSON_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "sccpe/formula.hpp"
#include "sccpe/process.hpp"
#include "sccpe/state.hpp"

namespace sccpe {

// Document shape (schema/state.schema.json):
//   {"objects":[{"kind":"store"|"process","aid":[innermost, ..., outermost],
//                "payload":<formula|process>}]}
// Formulas are {"tag":..., "name"?, "value"?, "args"?}; integer literal values
// are decimal strings. Processes are {"tag":..., "constraint"|"guard"?,
// "body"?, "args"?, "agent"|"var"|"index"?}.

nlohmann::json formula_to_json(const Formula& f);
nlohmann::json int_expr_to_json(const IntExpr& e);
nlohmann::json process_to_json(const Process& p);
nlohmann::json aid_to_json(const AgentId& aid);
nlohmann::json state_to_json_value(const SysState& s);

/// Objects in the given order, two-space indented.
std::string state_to_json(const SysState& s);

/// Throws ParseError naming the JSON pointer of the first offending value.
Formula formula_from_json(const nlohmann::json& j);
Process process_from_json(const nlohmann::json& j);
SysState state_from_json_value(const nlohmann::json& j);
SysState state_from_json(std::string_view text);

}  // namespace sccpe

#endif  // SCCPE_JSON_IO_HPP
