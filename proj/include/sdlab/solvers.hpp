#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sdlab/linalg.hpp"
#include "sdlab/problem.hpp"
#include "sdlab/rng.hpp"

namespace sdlab {

/// The three steepest-descent procedures.
///   alg1: plain steepest descent.
///   alg2: after each step, move the iterate to a random point at the same
///         distance from the known solution.
///   alg3: after each step, draw a fresh random system with the same solution.
enum class Algorithm { alg1, alg2, alg3 };

/// raw: descend on A x = b as given.
/// normal_equations: descend on A^T A x = A^T b. The matrix A^T A is applied
/// as A^T (A v) and never formed.
enum class SolverMode { raw, normal_equations };

[[nodiscard]] std::string_view to_string(Algorithm a) noexcept;
[[nodiscard]] std::string_view to_string(SolverMode m) noexcept;
[[nodiscard]] Algorithm parse_algorithm(std::string_view text);
[[nodiscard]] SolverMode parse_solver_mode(std::string_view text);

/// ||r|| <= kConvergenceFloor * ||rhs|| counts as converged.
inline constexpr double kConvergenceFloor = 1e-14;
/// |r^T A r| <= kCurvatureFloor * r^T r counts as breakdown.
inline constexpr double kCurvatureFloor = 1e-300;

enum class StepStatus { ok, converged, breakdown };

struct StepOutcome {
    Vector x_next;
    double alpha = 0.0;
    StepStatus status = StepStatus::ok;
};

/// One exact line-search step along r = b - A x with alpha = r^T r / r^T A r.
/// On converged or breakdown, x_next is x unchanged and alpha is 0.
/// Throws OverflowError when the new iterate is not finite.
[[nodiscard]] StepOutcome sd_step(const DenseMatrix& A, const Vector& b, const Vector& x);

/// As above, on the system selected by `mode`.
[[nodiscard]] StepOutcome sd_step(const DenseMatrix& A, const Vector& b, const Vector& x,
                                  SolverMode mode);

struct StepRecord {
    std::size_t k = 0;
    Vector x;
    std::optional<double> alpha;  ///< absent for k = 0
    double sigma_res = 0.0;
    double d_soln = 0.0;
    double sigma_dx = 0.0;
    /// alg2: | ||x_k - s|| - d_k | / d_k.  alg3: ||b_k - A_k s|| / ||b_k||.
    std::optional<double> oracle_defect;
};

enum class Termination { none, converged, breakdown, overflow };

[[nodiscard]] std::string_view to_string(Termination t) noexcept;

/// Full record of one run. Metrics are always measured against the original
/// (A, b, s) of the problem, whatever the mode or algorithm.
struct IterateTrace {
    Algorithm algorithm = Algorithm::alg1;
    SolverMode mode = SolverMode::raw;
    std::vector<StepRecord> records;
    Termination termination = Termination::none;
    /// Accepted steps with alpha < 0 (only possible on a non-SPD system).
    std::size_t negative_curvature_steps = 0;

    [[nodiscard]] bool terminated_early() const noexcept { return termination != Termination::none; }
    [[nodiscard]] std::size_t last_k() const noexcept { return records.empty() ? 0 : records.back().k; }
};

[[nodiscard]] IterateTrace run_alg1(const ProblemInstance& p, std::size_t n_iters,
                                    SolverMode mode = SolverMode::raw);
[[nodiscard]] IterateTrace run_alg2(const ProblemInstance& p, std::size_t n_iters, RngStream& rng,
                                    SolverMode mode = SolverMode::raw);
[[nodiscard]] IterateTrace run_alg3(const ProblemInstance& p, std::size_t n_iters, RngStream& rng,
                                    SolverMode mode = SolverMode::raw);

/// Dispatches to run_alg1/2/3; alg1 leaves rng untouched.
[[nodiscard]] IterateTrace run_algorithm(Algorithm algorithm, const ProblemInstance& p,
                                         std::size_t n_iters, RngStream& rng, SolverMode mode);

}  // namespace sdlab
