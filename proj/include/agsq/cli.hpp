// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace agsq {

/// Entry point shared by the binary and the CLI tests.
/// Exit codes: 0 success, 1 usage or domain error, 2 I/O error.
int cli_main(int argc, const char* const* argv);

}  // namespace agsq
