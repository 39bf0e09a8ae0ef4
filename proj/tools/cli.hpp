#pragma once

#include <iosfwd>

namespace skein::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // acceptance criterion failed
inline constexpr int kExitUnknownCommand = 64;
inline constexpr int kExitInvalidInput = 65;
inline constexpr int kExitInternal = 70;

/// Runs one `skein` invocation. JSON results go to `out` (or to --output),
/// errors to `err` as {"error": ...}.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skein::cli
