#pragma once

#include <iosfwd>

namespace pareto::cli {

// Exit codes: 0 pass or sat, 1 fail or unsat, 2 usage or input error,
// 3 resource budget exceeded.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResource = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pareto::cli
