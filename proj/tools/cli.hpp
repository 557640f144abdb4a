#pragma once

#include <iosfwd>

namespace gridperm::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kInternalError = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gridperm::cli
