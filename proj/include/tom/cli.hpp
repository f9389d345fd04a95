#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitNonGeneric = 2;
inline constexpr int kExitNoStrongPath = 3;
inline constexpr int kExitBadInput = 64;

// args excludes the program name. "-" as a file name reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace tom::cli
