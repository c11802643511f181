#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdlab/ensemble.hpp"

namespace sdlab {

inline constexpr std::string_view kCsvHeader =
    "algorithm,trial,iter,alpha,sigma_res,sigma_res_norm,d_soln,d_soln_norm";

/// Shortest decimal string that parses back to exactly `v`.
[[nodiscard]] std::string format_real(double v);

/// CSV text for the traces of one algorithm, rows ordered by (trial, iter).
/// The iter-0 row leaves alpha empty.
[[nodiscard]] std::string format_csv(std::span<const TraceSeries> series, Algorithm algorithm);

/// Writes <dir>/<algorithm>.csv for every algorithm in the result and
/// returns the paths in algorithm order. Creates dir if needed.
std::vector<std::filesystem::path> write_csv(const EnsembleResult& res,
                                             const std::filesystem::path& dir);

/// Parses CSV text back into per-trace series. Throws ConfigError on a
/// missing or wrong header, an empty table, or a malformed row.
[[nodiscard]] std::vector<TraceSeries> parse_csv(std::string_view text);
[[nodiscard]] std::vector<TraceSeries> read_csv(const std::filesystem::path& path);

}  // namespace sdlab
