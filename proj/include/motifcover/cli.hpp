#pragma once

#include <string>
#include <vector>

namespace motifcover {

// Entry point shared by the binary and the tests. Exit codes: 0 success,
// 1 usage error, 2 input validation error, 3 infeasible generation spec.
int cli_main(const std::vector<std::string>& args);

}  // namespace motifcover
