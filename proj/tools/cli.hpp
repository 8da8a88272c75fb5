#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "kfk/arith_sieve.hpp"

namespace kfk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Returns 0 on success,
/// 2 on a usage error and 1 when the computation itself fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads a `k,f` CSV with k = 1..x contiguous and f >= 0 (optional `k,f` header).
/// Throws kfk::format_error for gaps or malformed rows and std::domain_error for f < 0.
FunctionTable load_user_function(const std::filesystem::path& path);

}  // namespace kfk::cli
