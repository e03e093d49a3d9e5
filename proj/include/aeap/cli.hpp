#pragma once

#include <iosfwd>

namespace aeap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapExceeded = 3;

/// Entry point of the `aeap` command line tool. Results go to `out` as JSON;
/// diagnostics go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aeap
