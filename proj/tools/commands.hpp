#pragma once

#include <string>
#include <vector>

namespace cw::cli {

/// Parses and runs one `cw` invocation. Returns the process exit code:
/// 0 success (all checks passed), 1 a verification check failed,
/// 2 usage or domain error.
int run_cli(const std::vector<std::string>& args);

}  // namespace cw::cli
