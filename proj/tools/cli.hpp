#pragma once

#include <iosfwd>

namespace qtpm::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kEvalError = 2;
inline constexpr int kUsage = 64;

// Entry point of the qtpm tool with explicit streams, so tests can drive it.
// `in` backs `--signal -`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qtpm::cli
