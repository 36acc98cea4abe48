#pragma once

namespace tq {

/// Command-line entry point. Exit codes: 0 success, 1 validation failure,
/// 2 usage or parse error.
int cli_main(int argc, const char* const* argv);

}  // namespace tq
