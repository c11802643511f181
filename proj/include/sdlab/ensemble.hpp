#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sdlab/config.hpp"
#include "sdlab/metrics.hpp"
#include "sdlab/problem.hpp"
#include "sdlab/solvers.hpp"

namespace sdlab {

struct TraceKey {
    Algorithm algorithm = Algorithm::alg1;
    std::size_t trial = 0;

    friend auto operator<=>(const TraceKey&, const TraceKey&) = default;
};

/// Cross-trial statistics of the normalized residual at one iteration.
struct SummaryPoint {
    std::size_t k = 0;
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 0;  ///< trials whose record extends to k
};

using Summary = std::map<Algorithm, std::vector<SummaryPoint>>;

struct EnsembleResult {
    ExperimentConfig config;
    std::map<TraceKey, IterateTrace> traces;
    Summary summary;
};

/// The scalar per-iteration columns of one trace, i.e. what the CSV files
/// carry. Figures and summaries are computed from this projection so that
/// they work equally on in-memory results and on CSVs read back from disk.
struct TraceSeries {
    Algorithm algorithm = Algorithm::alg1;
    std::size_t trial = 0;
    std::vector<std::optional<double>> alpha;
    std::vector<double> sigma_res;
    std::vector<double> d_soln;

    [[nodiscard]] std::size_t size() const noexcept { return sigma_res.size(); }
    [[nodiscard]] std::vector<double> normalized(MetricName metric) const;
};

// Stream layout for a master seed m:
//   (m, 0)                       shared base problem
//   (m, t + 1)                   trial t: its x0 (shared) or whole instance
//   (m, (a + 1) << 32 | t + 1)   random draws of algorithm a on trial t
[[nodiscard]] std::uint64_t problem_stream_index(std::size_t trial) noexcept;
[[nodiscard]] std::uint64_t algorithm_stream_index(Algorithm a, std::size_t trial) noexcept;

/// Runs every (algorithm, trial) pair. Result is a pure function of cfg and
/// independent of the number of worker threads.
[[nodiscard]] EnsembleResult run_ensemble(const ExperimentConfig& cfg);

/// As above with the shared base problem supplied by the caller (x0 is still
/// drawn per trial around base.s). Requires cfg.shared_problem.
[[nodiscard]] EnsembleResult run_ensemble(const ExperimentConfig& cfg, const ProblemInstance& base);

/// Interquartile range over median of the normalized residual across trials
/// at iteration k. Quartiles interpolate linearly between order statistics.
/// Throws InsufficientData when fewer than two trials reach k.
[[nodiscard]] double spread_statistic(const EnsembleResult& res, Algorithm algorithm, std::size_t k);

[[nodiscard]] std::vector<TraceSeries> to_series(const EnsembleResult& res);
[[nodiscard]] TraceSeries to_series(const TraceKey& key, const IterateTrace& trace);

/// Per algorithm and k: median/min/max of sigma_res_norm over the traces that
/// reach k. Early-terminated traces drop out after their last record.
[[nodiscard]] Summary summarize(std::span<const TraceSeries> series);

/// Median with linear interpolation (q = 0.5 of quantile()).
[[nodiscard]] double median(std::vector<double> values);
[[nodiscard]] double quantile(std::vector<double> values, double q);

/// Worker count from SDLAB_THREADS; 0, unset or unparsable means
/// std::thread::hardware_concurrency().
[[nodiscard]] std::size_t configured_workers();

/// Calls fn(i) for i in [0, count) on up to `workers` threads. The first
/// exception by index is rethrown after all workers join.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& fn);

}  // namespace sdlab
