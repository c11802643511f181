#include "sdlab/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "sdlab/errors.hpp"

namespace sdlab {

std::vector<double> TraceSeries::normalized(MetricName metric) const {
    const auto& raw = metric == MetricName::sigma_res_norm ? sigma_res : d_soln;
    return normalize_series(raw, metric).values;
}

std::uint64_t problem_stream_index(std::size_t trial) noexcept { return trial + 1; }

std::uint64_t algorithm_stream_index(Algorithm a, std::size_t trial) noexcept {
    return ((static_cast<std::uint64_t>(a) + 1) << 32) | (trial + 1);
}

std::size_t configured_workers() {
    std::size_t workers = 0;
    if (const char* env = std::getenv("SDLAB_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0') workers = v;
    }
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    return workers;
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& fn) {
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw InsufficientData("quantile of an empty sample");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

double median(std::vector<double> values) { return quantile(std::move(values), 0.5); }

TraceSeries to_series(const TraceKey& key, const IterateTrace& trace) {
    TraceSeries s;
    s.algorithm = key.algorithm;
    s.trial = key.trial;
    for (const auto& rec : trace.records) {
        s.alpha.push_back(rec.alpha);
        s.sigma_res.push_back(rec.sigma_res);
        s.d_soln.push_back(rec.d_soln);
    }
    return s;
}

std::vector<TraceSeries> to_series(const EnsembleResult& res) {
    std::vector<TraceSeries> out;
    out.reserve(res.traces.size());
    for (const auto& [key, trace] : res.traces) out.push_back(to_series(key, trace));
    return out;
}

Summary summarize(std::span<const TraceSeries> series) {
    std::map<Algorithm, std::vector<std::vector<double>>> by_k;
    for (const auto& s : series) {
        auto& columns = by_k[s.algorithm];
        const auto values = s.normalized(MetricName::sigma_res_norm);
        if (columns.size() < values.size()) columns.resize(values.size());
        for (std::size_t k = 0; k < values.size(); ++k) columns[k].push_back(values[k]);
    }
    Summary out;
    for (auto& [alg, columns] : by_k) {
        auto& points = out[alg];
        for (std::size_t k = 0; k < columns.size(); ++k) {
            const auto& col = columns[k];
            const auto [mn, mx] = std::minmax_element(col.begin(), col.end());
            points.push_back({k, median(col), *mn, *mx, col.size()});
        }
    }
    return out;
}

namespace {

EnsembleResult run_tasks(const ExperimentConfig& cfg, const ProblemInstance* shared_base) {
    // x0 per trial for the shared case; independent instances are rebuilt
    // inside each task from their own stream, which keeps memory bounded.
    std::vector<Vector> shared_x0;
    if (shared_base) {
        shared_x0.reserve(cfg.n_trials);
        for (std::size_t t = 0; t < cfg.n_trials; ++t) {
            RngStream rng = RngStream::derived(cfg.master_seed, problem_stream_index(t));
            shared_x0.push_back(draw_starting_point(rng, shared_base->s));
        }
    }

    struct Task {
        TraceKey key;
        IterateTrace trace;
    };
    std::vector<Task> tasks;
    for (const Algorithm a : cfg.algorithms) {
        for (std::size_t t = 0; t < cfg.n_trials; ++t) tasks.push_back({{a, t}, {}});
    }

    parallel_for(tasks.size(), configured_workers(), [&](std::size_t i) {
        Task& task = tasks[i];
        const std::size_t t = task.key.trial;
        ProblemInstance p;
        if (shared_base) {
            p = *shared_base;
            p.x0 = shared_x0[t];
        } else {
            RngStream prng = RngStream::derived(cfg.master_seed, problem_stream_index(t));
            p = generate_problem(prng, cfg.n);
        }
        RngStream rng =
            RngStream::derived(cfg.master_seed, algorithm_stream_index(task.key.algorithm, t));
        task.trace = run_algorithm(task.key.algorithm, p, cfg.n_iters, rng, cfg.mode);
    });

    EnsembleResult res;
    res.config = cfg;
    for (auto& task : tasks) res.traces.emplace(task.key, std::move(task.trace));
    const auto series = to_series(res);
    res.summary = summarize(series);
    return res;
}

}  // namespace

EnsembleResult run_ensemble(const ExperimentConfig& cfg) {
    cfg.validate();
    if (!cfg.shared_problem) return run_tasks(cfg, nullptr);
    RngStream rng = RngStream::derived(cfg.master_seed, 0);
    const ProblemInstance base = generate_problem(rng, cfg.n);
    return run_tasks(cfg, &base);
}

EnsembleResult run_ensemble(const ExperimentConfig& cfg, const ProblemInstance& base) {
    cfg.validate();
    if (!cfg.shared_problem) {
        throw ConfigError("run_ensemble: a supplied base problem requires shared_problem = true");
    }
    if (base.n != cfg.n || base.A.dim() != cfg.n) {
        throw ConfigError("run_ensemble: base problem dimension does not match n");
    }
    return run_tasks(cfg, &base);
}

double spread_statistic(const EnsembleResult& res, Algorithm algorithm, std::size_t k) {
    std::vector<double> values;
    for (const auto& [key, trace] : res.traces) {
        if (key.algorithm != algorithm || trace.records.size() <= k) continue;
        values.push_back(trace.records[k].sigma_res / trace.records[0].sigma_res);
    }
    if (values.size() < 2) {
        throw InsufficientData("spread_statistic: fewer than two trials reach iteration " +
                               std::to_string(k));
    }
    const double q1 = quantile(values, 0.25);
    const double q3 = quantile(values, 0.75);
    return (q3 - q1) / median(std::move(values));
}

}  // namespace sdlab
