// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

namespace cvdcmap {

/// Entry point of the `cvdcmap` tool. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cvdcmap
