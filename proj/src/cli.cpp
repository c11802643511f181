#include "sdlab/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <ostream>

#include "sdlab/csv.hpp"
#include "sdlab/errors.hpp"
#include "sdlab/figure.hpp"
#include "sdlab/repro.hpp"

namespace sdlab {

namespace {

void print_summary(const EnsembleResult& res, std::ostream& out) {
    for (const auto& [alg, points] : res.summary) {
        if (points.empty()) continue;
        const auto& last = points.back();
        out << to_string(alg) << ": k=" << last.k << " median sigma_res_norm=" << std::setprecision(4)
            << last.median << " (min " << last.min << ", max " << last.max << ", " << last.count
            << " trials)\n";
    }
    std::size_t early = 0;
    for (const auto& [key, trace] : res.traces) early += trace.terminated_early() ? 1 : 0;
    if (early) out << early << " trace(s) terminated early\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Steepest-descent experiment laboratory", "sdlab"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    auto* run = app.add_subcommand("run", "Run an ensemble from a config file and write CSVs");
    run->add_option("config", config_path, "Experiment config file")->required()->check(CLI::ExistingFile);
    run->add_option("--seed", seed, "Override master_seed");
    run->add_option("--out", out_dir, "Override output_dir");

    std::vector<std::string> csv_paths;
    std::string spec_path;
    std::string figure_out;
    auto* fig = app.add_subcommand("figure", "Draw an SVG figure from result CSVs");
    fig->add_option("csv", csv_paths, "Result CSV files")->required()->check(CLI::ExistingFile);
    fig->add_option("--spec", spec_path, "Figure spec file")->required()->check(CLI::ExistingFile);
    fig->add_option("--out", figure_out, "Output SVG path")->required();

    std::uint64_t repro_seed = 42;
    std::string repro_out = "repro";
    std::string repro_mode = "normal-equations";
    auto* repro = app.add_subcommand("repro", "Run the built-in reference figures end to end");
    repro->add_option("--seed", repro_seed, "Master seed")->capture_default_str();
    repro->add_option("--out", repro_out, "Output directory")->capture_default_str();
    repro->add_option("--mode", repro_mode, "raw or normal-equations")
        ->check(CLI::IsMember({"raw", "normal-equations"}))
        ->capture_default_str();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "sdlab: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*run) {
            ExperimentConfig cfg = load_config(config_path);
            if (seed) cfg.master_seed = *seed;
            if (!out_dir.empty()) cfg.output_dir = out_dir;
            const EnsembleResult res = run_ensemble(cfg);
            for (const auto& p : write_csv(res, cfg.output_dir)) out << "wrote " << p.generic_string() << '\n';
            print_summary(res, out);
        } else if (*fig) {
            const FigureSpec spec = load_figure_spec(spec_path);
            std::vector<TraceSeries> series;
            for (const auto& p : csv_paths) {
                auto part = read_csv(p);
                series.insert(series.end(), std::make_move_iterator(part.begin()),
                              std::make_move_iterator(part.end()));
            }
            emit_figure(series, spec, figure_out);
            out << "wrote " << figure_out << '\n';
        } else if (*repro) {
            const auto result = run_repro(repro_seed, repro_out, parse_solver_mode(repro_mode));
            for (const auto& [name, res] : result.ensembles) {
                out << "[" << name << "]\n";
                print_summary(res, out);
            }
            out << "wrote " << result.files.size() << " files under " << repro_out << '\n';
        }
    } catch (const ConfigError& e) {
        err << "sdlab: configuration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "sdlab: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace sdlab
