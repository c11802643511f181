#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sdlab/metrics.hpp"
#include "sdlab/solvers.hpp"

namespace sdlab {

struct ExperimentConfig {
    std::size_t n = 10;
    std::size_t n_trials = 10;
    std::size_t n_iters = 10;
    std::vector<Algorithm> algorithms{Algorithm::alg1};
    SolverMode mode = SolverMode::raw;
    std::uint64_t master_seed = 0;
    /// true: one (A, b, s) shared by every trial, only x0 varies.
    /// false: every trial is an independent problem.
    bool shared_problem = true;
    std::filesystem::path output_dir = ".";

    /// Throws ConfigError unless n >= 2, n_trials >= 1, n_iters >= 1 and
    /// algorithms is non-empty without duplicates.
    void validate() const;
};

/// Which curves a figure shows and how.
struct FigureSpec {
    std::vector<Algorithm> algorithms;
    MetricName y_metric = MetricName::sigma_res_norm;
    bool log_y = false;
    std::string title;

    void validate() const;
};

// Both file formats are flat `key = value` lines. '#' starts a comment and
// blank lines are skipped. Unknown or repeated keys are errors.
//
// Experiment keys: n, n_trials, n_iters, algorithms (comma list of
// alg1/alg2/alg3), mode (raw | normal-equations), master_seed,
// shared_problem (true | false), output_dir. The first four are required.
//
// Figure keys: algorithms, y_metric (sigma_res_norm | d_soln_norm), log_y,
// title. algorithms and y_metric are required.

[[nodiscard]] ExperimentConfig parse_config(std::string_view text);
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path& path);
[[nodiscard]] std::string format_config(const ExperimentConfig& cfg);

[[nodiscard]] FigureSpec parse_figure_spec(std::string_view text);
[[nodiscard]] FigureSpec load_figure_spec(const std::filesystem::path& path);

[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace sdlab
