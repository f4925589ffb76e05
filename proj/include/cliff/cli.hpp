#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliff {

// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// args[0] is the program name.
int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cliff
