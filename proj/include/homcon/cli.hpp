#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homcon {

// Runs one homcon command. Exit codes: 0 success, 2 usage or parse error,
// 3 resource limit exceeded, 4 conjecture or cross-check violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homcon
