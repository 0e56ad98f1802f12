#pragma once

#include <ostream>

namespace kbranch {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 ok, 1 selftest failure, 2 parse error, 3 validation error,
// 4 stable-range violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kbranch
