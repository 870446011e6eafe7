#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paircorr::cli {

inline constexpr const char* kVersion = "1.0.0";

// Exit codes: 0 success, 1 an embedded pass criterion failed, 2 usage or
// runtime error. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace paircorr::cli
