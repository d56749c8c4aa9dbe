#pragma once

#include <string>
#include <vector>

namespace pancover {

/// Runs the command-line interface. Exit codes: 0 success, 2 usage or parse
/// error, 3 certificate verification failure, 4 budget exceeded.
int cli_run(const std::vector<std::string>& args);

}  // namespace pancover
