#include "sdlab/solvers.hpp"

#include <cmath>
#include <string>

#include "sdlab/errors.hpp"
#include "sdlab/metrics.hpp"

namespace sdlab {

std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
        case Algorithm::alg1: return "alg1";
        case Algorithm::alg2: return "alg2";
        case Algorithm::alg3: return "alg3";
    }
    return "unknown";
}

std::string_view to_string(SolverMode m) noexcept {
    switch (m) {
        case SolverMode::raw: return "raw";
        case SolverMode::normal_equations: return "normal-equations";
    }
    return "unknown";
}

std::string_view to_string(Termination t) noexcept {
    switch (t) {
        case Termination::none: return "none";
        case Termination::converged: return "converged";
        case Termination::breakdown: return "breakdown";
        case Termination::overflow: return "overflow";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view text) {
    if (text == "alg1" || text == "ALG1") return Algorithm::alg1;
    if (text == "alg2" || text == "ALG2") return Algorithm::alg2;
    if (text == "alg3" || text == "ALG3") return Algorithm::alg3;
    throw ConfigError("unknown algorithm '" + std::string(text) + "'");
}

SolverMode parse_solver_mode(std::string_view text) {
    if (text == "raw") return SolverMode::raw;
    if (text == "normal-equations") return SolverMode::normal_equations;
    throw ConfigError("unknown mode '" + std::string(text) + "' (expected raw or normal-equations)");
}

namespace {

// Shared tail of both step variants: r is the descent direction (residual of
// the system being solved), curvature = r^T M r, rhs_norm the norm of its
// right-hand side.
StepOutcome finish_step(const Vector& x, const Vector& r, double rhs_norm,
                        const auto& curvature_of) {
    const double rr = dot(r, r);
    if (std::sqrt(rr) <= kConvergenceFloor * rhs_norm) {
        return {x, 0.0, StepStatus::converged};
    }
    const double curvature = curvature_of(r);
    if (!(std::abs(curvature) > kCurvatureFloor * rr)) {
        return {x, 0.0, StepStatus::breakdown};
    }
    const double alpha = rr / curvature;
    Vector next = x;
    axpy(alpha, r, next);
    if (!std::isfinite(alpha) || !next.all_finite()) {
        throw OverflowError("sd_step: iterate is no longer finite");
    }
    return {std::move(next), alpha, StepStatus::ok};
}

}  // namespace

StepOutcome sd_step(const DenseMatrix& A, const Vector& b, const Vector& x) {
    if (A.dim() != b.size() || b.size() != x.size()) {
        throw ContractViolation("sd_step: dimension mismatch");
    }
    const Vector r = b - matvec(A, x);
    return finish_step(x, r, norm(b), [&](const Vector& d) { return dot(d, matvec(A, d)); });
}

StepOutcome sd_step(const DenseMatrix& A, const Vector& b, const Vector& x, SolverMode mode) {
    if (mode == SolverMode::raw) return sd_step(A, b, x);
    if (A.dim() != b.size() || b.size() != x.size()) {
        throw ContractViolation("sd_step: dimension mismatch");
    }
    // Residual of A^T A x = A^T b, and d^T A^T A d = ||A d||^2.
    const Vector r = matvec_transposed(A, b - matvec(A, x));
    return finish_step(x, r, norm(matvec_transposed(A, b)), [&](const Vector& d) {
        const Vector ad = matvec(A, d);
        return dot(ad, ad);
    });
}

namespace {

StepRecord characterize(const ProblemInstance& p, std::size_t k, Vector x,
                        std::optional<double> alpha) {
    StepRecord rec;
    rec.k = k;
    rec.alpha = alpha;
    rec.sigma_res = sigma_res(p.A, p.b, x);
    rec.d_soln = d_soln(x, p.s);
    rec.sigma_dx = sigma_dx(x, p.s);
    rec.x = std::move(x);
    return rec;
}

void require_iterations(std::size_t n_iters) {
    if (n_iters < 1) throw ContractViolation("n_iters must be >= 1");
}

// Runs the steepest-descent loop. `system` yields the (A, b) to step on at
// iteration k; `after_step` may move the iterate and returns the oracle
// defect to record, if any.
IterateTrace run_loop(Algorithm algorithm, const ProblemInstance& p, std::size_t n_iters,
                      SolverMode mode, auto&& system, auto&& after_step) {
    require_iterations(n_iters);
    IterateTrace trace;
    trace.algorithm = algorithm;
    trace.mode = mode;
    trace.records.reserve(n_iters + 1);
    try {
        trace.records.push_back(characterize(p, 0, p.x0, std::nullopt));
        for (std::size_t k = 1; k <= n_iters; ++k) {
            const auto& [A, b] = system();
            StepOutcome step = sd_step(A, b, trace.records.back().x, mode);
            if (step.status == StepStatus::converged) {
                trace.termination = Termination::converged;
                break;
            }
            if (step.status == StepStatus::breakdown) {
                trace.termination = Termination::breakdown;
                break;
            }
            if (step.alpha < 0.0) ++trace.negative_curvature_steps;
            const std::optional<double> defect = after_step(step.x_next);
            StepRecord rec = characterize(p, k, std::move(step.x_next), step.alpha);
            rec.oracle_defect = defect;
            trace.records.push_back(std::move(rec));
        }
    } catch (const OverflowError&) {
        trace.termination = Termination::overflow;
    }
    return trace;
}

struct SystemRef {
    const DenseMatrix& A;
    const Vector& b;
};

}  // namespace

IterateTrace run_alg1(const ProblemInstance& p, std::size_t n_iters, SolverMode mode) {
    return run_loop(
        Algorithm::alg1, p, n_iters, mode, [&] { return SystemRef{p.A, p.b}; },
        [](Vector&) { return std::optional<double>{}; });
}

IterateTrace run_alg2(const ProblemInstance& p, std::size_t n_iters, RngStream& rng,
                      SolverMode mode) {
    return run_loop(
        Algorithm::alg2, p, n_iters, mode, [&] { return SystemRef{p.A, p.b}; },
        [&](Vector& x) -> std::optional<double> {
            const double dk = d_soln(x, p.s);
            const Vector v = random_direction(rng, p.n);
            x = p.s;
            axpy(dk, v, x);
            const double moved = d_soln(x, p.s);
            return dk > 0.0 ? std::abs(moved - dk) / dk : moved;
        });
}

IterateTrace run_alg3(const ProblemInstance& p, std::size_t n_iters, RngStream& rng,
                      SolverMode mode) {
    DenseMatrix current_A;
    Vector current_b;
    bool regenerated = false;
    return run_loop(
        Algorithm::alg3, p, n_iters, mode,
        [&] {
            return regenerated ? SystemRef{current_A, current_b} : SystemRef{p.A, p.b};
        },
        [&](Vector&) -> std::optional<double> {
            current_A = randn_matrix(rng, p.n);
            current_b = matvec(current_A, p.s);
            regenerated = true;
            const double bn = norm(current_b);
            const double res = norm(current_b - matvec(current_A, p.s));
            return bn > 0.0 ? res / bn : res;
        });
}

IterateTrace run_algorithm(Algorithm algorithm, const ProblemInstance& p, std::size_t n_iters,
                           RngStream& rng, SolverMode mode) {
    switch (algorithm) {
        case Algorithm::alg1: return run_alg1(p, n_iters, mode);
        case Algorithm::alg2: return run_alg2(p, n_iters, rng, mode);
        case Algorithm::alg3: return run_alg3(p, n_iters, rng, mode);
    }
    throw ContractViolation("run_algorithm: unknown algorithm");
}

}  // namespace sdlab
