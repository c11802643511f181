#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `sdlab` tool. Subcommands:
///   run <config> [--seed S] [--out DIR]
///   figure <csv...> --spec <figspec> --out FILE
///   repro [--seed S] [--out DIR] [--mode raw|normal-equations]
/// Returns 0 on success, 2 for usage and configuration errors, 1 otherwise.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdlab
