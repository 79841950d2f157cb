// cli.hpp
// Command-line frontend. Exit codes: 0 success, 1 verification failure,
// 2 usage or parse error.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace boxlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boxlab::cli
