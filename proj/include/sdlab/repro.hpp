#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sdlab/config.hpp"
#include "sdlab/ensemble.hpp"

namespace sdlab {

/// One ensemble of the built-in reproduction set and the figures drawn from it.
struct ReproEnsemble {
    std::string name;
    ExperimentConfig config;
    std::vector<std::pair<std::string, FigureSpec>> figures;  ///< (file stem, spec)
};

/// The ten reference figures grouped by the ensemble that feeds them:
///   n10_single_10    N=10,   1 trial,  10 iters, alg1            -> fig01, fig02
///   n10_multi_10     N=10,   10 trials, 10 iters, alg1           -> fig03, fig05
///   n1000_multi_10   N=1000, 10 trials, 10 iters, alg1           -> fig04, fig06
///   n10_single_50    N=10,   1 trial,  50 iters, alg1-3 (log y)  -> fig07, fig09
///   n1000_single_50  N=1000, 1 trial,  50 iters, alg1-3 (log y)  -> fig08, fig10
/// Every ensemble uses the same master seed, so equal N means equal problem.
[[nodiscard]] std::vector<ReproEnsemble> builtin_repro_set(std::uint64_t seed, SolverMode mode);

struct ReproOutput {
    std::vector<std::pair<std::string, EnsembleResult>> ensembles;
    std::vector<std::filesystem::path> files;
};

/// Runs the built-in set. Writes <out>/<ensemble>/{config.txt, alg*.csv} and
/// <out>/figures/figNN.svg.
ReproOutput run_repro(std::uint64_t seed, const std::filesystem::path& out, SolverMode mode);

}  // namespace sdlab
