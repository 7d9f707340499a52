#pragma once

#include <iosfwd>

namespace galring::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kBudget = 2;
inline constexpr int kVerifyFailed = 3;

/// Runs the `galring` command line with the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace galring::cli
