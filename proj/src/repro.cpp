#include "sdlab/repro.hpp"

#include "sdlab/csv.hpp"
#include "sdlab/errors.hpp"
#include "sdlab/figure.hpp"

namespace sdlab {

namespace {

ExperimentConfig make_config(std::size_t n, std::size_t trials, std::size_t iters,
                             std::vector<Algorithm> algorithms, std::uint64_t seed, SolverMode mode) {
    ExperimentConfig cfg;
    cfg.n = n;
    cfg.n_trials = trials;
    cfg.n_iters = iters;
    cfg.algorithms = std::move(algorithms);
    cfg.mode = mode;
    cfg.master_seed = seed;
    cfg.shared_problem = true;
    return cfg;
}

FigureSpec figure(std::vector<Algorithm> algorithms, MetricName metric, bool log_y, std::string title) {
    return {std::move(algorithms), metric, log_y, std::move(title)};
}

}  // namespace

std::vector<ReproEnsemble> builtin_repro_set(std::uint64_t seed, SolverMode mode) {
    using enum Algorithm;
    const auto res = MetricName::sigma_res_norm;
    const auto dist = MetricName::d_soln_norm;
    return {
        {"n10_single_10",
         make_config(10, 1, 10, {alg1}, seed, mode),
         {{"fig01", figure({alg1}, res, false, "Residuals vs iteration, N = 10")},
          {"fig02", figure({alg1}, dist, false, "Distance from solution vs iteration, N = 10")}}},
        {"n10_multi_10",
         make_config(10, 10, 10, {alg1}, seed, mode),
         {{"fig03", figure({alg1}, res, false, "Residuals, N = 10, 10 starting points")},
          {"fig05", figure({alg1}, dist, false, "Distance from solution, N = 10, 10 starting points")}}},
        {"n1000_multi_10",
         make_config(1000, 10, 10, {alg1}, seed, mode),
         {{"fig04", figure({alg1}, res, false, "Residuals, N = 1000, 10 starting points")},
          {"fig06", figure({alg1}, dist, false, "Distance from solution, N = 1000, 10 starting points")}}},
        {"n10_single_50",
         make_config(10, 1, 50, {alg1, alg2, alg3}, seed, mode),
         {{"fig07", figure({alg1, alg2}, res, true, "Residuals, N = 10, alg1 vs alg2")},
          {"fig09", figure({alg1, alg3}, res, true, "Residuals, N = 10, alg1 vs alg3")}}},
        {"n1000_single_50",
         make_config(1000, 1, 50, {alg1, alg2, alg3}, seed, mode),
         {{"fig08", figure({alg1, alg2}, res, true, "Residuals, N = 1000, alg1 vs alg2")},
          {"fig10", figure({alg1, alg3}, res, true, "Residuals, N = 1000, alg1 vs alg3")}}},
    };
}

ReproOutput run_repro(std::uint64_t seed, const std::filesystem::path& out, SolverMode mode) {
    ReproOutput result;
    const auto figures_dir = out / "figures";
    std::error_code ec;
    std::filesystem::create_directories(figures_dir, ec);
    if (ec) throw IoError("cannot create directory '" + figures_dir.string() + "': " + ec.message());

    for (auto& entry : builtin_repro_set(seed, mode)) {
        const auto dir = out / entry.name;
        // Recorded relative to the repro root so the tree does not depend on where it lives.
        entry.config.output_dir = entry.name;
        EnsembleResult res = run_ensemble(entry.config);
        for (auto& p : write_csv(res, dir)) result.files.push_back(std::move(p));
        write_text_file(dir / "config.txt", format_config(entry.config));
        result.files.push_back(dir / "config.txt");
        const auto series = to_series(res);
        for (const auto& [stem, spec] : entry.figures) {
            auto path = figures_dir / (stem + ".svg");
            emit_figure(series, spec, path);
            result.files.push_back(std::move(path));
        }
        result.ensembles.emplace_back(entry.name, std::move(res));
    }
    return result;
}

}  // namespace sdlab
