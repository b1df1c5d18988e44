// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_TOOLS_CLI_HPP
#define SCCPE_TOOLS_CLI_HPP

#include <iosfwd>

namespace sccpe::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInconclusive = 2, kInternal = 3 };

/// The `sccpe` command line. `in` backs the `-` input path. SCCPE_SOLVER, when
/// set, is the default for `--solver`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sccpe::cli

#endif  // SCCPE_TOOLS_CLI_HPP
