#pragma once

#include <ostream>

namespace rankbound::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kNumerical = 3;

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace rankbound::cli
