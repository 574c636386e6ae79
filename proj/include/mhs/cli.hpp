#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mhs/types.hpp"

namespace mhs {

// exit codes of the command-line front end
enum ExitCode { kOk = 0, kDomain = 1, kVerifyFailed = 2, kUsage = 64 };

// "re,im" or "re"
cplx parse_complex(const std::string& s);
Point parse_point(const std::vector<std::string>& tokens);
std::vector<int> parse_ints(const std::string& s);

// argv[0] is the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mhs
