#pragma once

#include <iosfwd>

namespace pmctw::cli {

/// Exit codes: 0 success, 1 a "tw > k" verdict (or an invalid decomposition
/// in `validate`, or a self-check mismatch), 2 input or usage errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;
inline constexpr int kExitInput = 2;

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pmctw::cli
