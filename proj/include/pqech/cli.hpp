#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pqech::cli {

inline constexpr const char* kVersion = "pqech 0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 2 on bad input or overflow,
/// 3 when an internal consistency check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqech::cli
