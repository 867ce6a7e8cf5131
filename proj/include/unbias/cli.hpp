#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace unbias {

// Runs one command line (without the program name). Exit codes: 0 success or
// "true", 1 "false" or failed laws, 2 usage and input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin);

}  // namespace unbias
