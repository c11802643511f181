#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

#include "sdlab/errors.hpp"
#include "sdlab/metrics.hpp"
#include "sdlab/solvers.hpp"

using namespace sdlab;

namespace {

ProblemInstance hand_built(DenseMatrix A, Vector s, Vector x0) {
    ProblemInstance p;
    p.n = s.size();
    p.b = matvec(A, s);
    p.A = std::move(A);
    p.s = std::move(s);
    p.x0 = std::move(x0);
    return p;
}

// f(x) = 1/2 x^T M x - c^T x
double energy(const DenseMatrix& M, const Vector& c, const Vector& x) {
    return 0.5 * dot(x, matvec(M, x)) - dot(c, x);
}

// Minimizer of t -> f(x + t d) located from central-difference slopes at
// t = 0 and t = 1. Exact for a quadratic up to rounding, and uses nothing
// but evaluations of f.
double line_search_oracle(const DenseMatrix& M, const Vector& c, const Vector& x, const Vector& d,
                          double scale) {
    auto phi = [&](double t) { return energy(M, c, x + (t * scale) * d); };
    const double h = 1e-3;
    const double slope0 = (phi(h) - phi(-h)) / (2 * h);
    const double slope1 = (phi(1 + h) - phi(1 - h)) / (2 * h);
    return scale * (-slope0 / (slope1 - slope0));
}

std::int64_t ulp_distance(double a, double b) {
    std::int64_t ia = 0;
    std::int64_t ib = 0;
    std::memcpy(&ia, &a, sizeof a);
    std::memcpy(&ib, &b, sizeof b);
    return std::abs(ia - ib);
}

double final_norm_residual(const IterateTrace& t) {
    return t.records.back().sigma_res / t.records.front().sigma_res;
}

}  // namespace

TEST_CASE("sd_step on the identity reaches b in one step with alpha = 1") {
    for (std::size_t n : {1u, 4u, 30u}) {
        RngStream rng(n);
        const Vector b = randn_vector(rng, n);
        const Vector x = randn_vector(rng, n);
        const StepOutcome out = sd_step(DenseMatrix::identity(n), b, x);
        CHECK(out.status == StepStatus::ok);
        CHECK(out.alpha == 1.0);
        for (std::size_t i = 0; i < n; ++i) CHECK(out.x_next[i] == doctest::Approx(b[i]).epsilon(1e-15));
    }
}

TEST_CASE("sd_step 1x1 system") {
    const StepOutcome out = sd_step(DenseMatrix{{4.0}}, Vector{2.0}, Vector{0.0});
    CHECK(out.alpha == 0.25);
    CHECK(out.x_next == Vector{0.5});
    const StepOutcome next = sd_step(DenseMatrix{{4.0}}, Vector{2.0}, out.x_next);
    CHECK(next.status == StepStatus::converged);
    CHECK(next.x_next == out.x_next);
}

TEST_CASE("sd_step alpha is the exact line minimizer on SPD systems") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RngStream rng(seed);
        const ProblemInstance p = generate_problem(rng, 12);
        const auto [M, c] = spd_transform(p.A, p.b);
        const StepOutcome out = sd_step(M, c, p.x0);
        REQUIRE(out.status == StepStatus::ok);
        const Vector r = c - matvec(M, p.x0);
        const double oracle = line_search_oracle(M, c, p.x0, r, out.alpha);
        CHECK(out.alpha == doctest::Approx(oracle).epsilon(1e-6));
        CHECK(out.alpha > 0.0);
    }
}

TEST_CASE("sd_step in raw mode leaves the new residual orthogonal to the old") {
    RngStream rng(77);
    for (int i = 0; i < 20; ++i) {
        const ProblemInstance p = generate_problem(rng, 15);
        const StepOutcome out = sd_step(p.A, p.b, p.x0);
        REQUIRE(out.status == StepStatus::ok);
        const Vector r0 = p.b - matvec(p.A, p.x0);
        const Vector r1 = p.b - matvec(p.A, out.x_next);
        CHECK(std::abs(dot(r0, r1)) <= 1e-9 * dot(r0, r0) * std::max(1.0, std::abs(out.alpha)));
    }
}

TEST_CASE("sd_step breakdown and errors") {
    // Skew-symmetric: r^T A r == 0 for every r.
    const DenseMatrix skew{{0, 1}, {-1, 0}};
    const StepOutcome out = sd_step(skew, Vector{1, 2}, Vector{0, 0});
    CHECK(out.status == StepStatus::breakdown);
    CHECK(out.x_next == Vector{0, 0});
    CHECK_THROWS_AS((void)sd_step(skew, Vector{1, 2, 3}, Vector{0, 0}), ContractViolation);
    CHECK_THROWS_AS((void)sd_step(skew, Vector{1, 2}, Vector{0, 0, 0}, SolverMode::normal_equations),
                    ContractViolation);
}

TEST_CASE("normal-equations step matches the explicit A^T A route") {
    for (std::size_t n : {2u, 10u, 60u}) {
        RngStream rng(n + 5);
        const ProblemInstance p = generate_problem(rng, n);
        const auto [M, c] = spd_transform(p.A, p.b);
        const StepOutcome implicit = sd_step(p.A, p.b, p.x0, SolverMode::normal_equations);
        const StepOutcome explicit_route = sd_step(M, c, p.x0);
        CHECK(implicit.alpha == doctest::Approx(explicit_route.alpha).epsilon(1e-10));
        CHECK(norm(implicit.x_next - explicit_route.x_next) <= 1e-10 * norm(p.x0));
    }
}

TEST_CASE("one-step convergence along an eigenvector of an SPD matrix") {
    const std::size_t n = 6;
    Vector diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = 1.0 + static_cast<double>(i);
    const Vector s{1, -2, 3, -4, 5, -6};
    for (std::size_t axis = 0; axis < n; ++axis) {
        Vector x0 = s;
        x0[axis] += 3.0;
        const ProblemInstance p = hand_built(DenseMatrix::diagonal(diag), s, x0);
        const IterateTrace t = run_alg1(p, 10);
        REQUIRE(t.records.size() >= 2);
        CHECK(t.records[1].d_soln <= 1e-8);
        CHECK(t.records[1].alpha == doctest::Approx(1.0 / diag[axis]).epsilon(1e-15));
        CHECK(t.termination == Termination::converged);
        CHECK(t.last_k() == 1);
    }
}

TEST_CASE("run_alg1 on the identity converges at k = 1") {
    const ProblemInstance p = hand_built(DenseMatrix::identity(5), Vector{1, 2, 3, 4, 5}, Vector{0, 0, 0, 0, 0});
    const IterateTrace t = run_alg1(p, 10);
    CHECK(t.termination == Termination::converged);
    CHECK(t.terminated_early());
    CHECK(t.last_k() == 1);
    CHECK(t.records[0].x == p.x0);
    CHECK(!t.records[0].alpha.has_value());
    CHECK(t.records[1].d_soln == 0.0);
}

TEST_CASE("traces are well formed") {
    RngStream rng(12);
    const ProblemInstance p = generate_problem(rng, 20);
    for (const SolverMode mode : {SolverMode::raw, SolverMode::normal_equations}) {
        for (const Algorithm alg : {Algorithm::alg1, Algorithm::alg2, Algorithm::alg3}) {
            RngStream run_rng(3);
            const IterateTrace t = run_algorithm(alg, p, 15, run_rng, mode);
            CHECK(t.algorithm == alg);
            CHECK(t.mode == mode);
            CHECK(t.records[0].x == p.x0);
            std::size_t negatives = 0;
            for (std::size_t k = 0; k < t.records.size(); ++k) {
                const StepRecord& rec = t.records[k];
                CHECK(rec.k == k);
                CHECK(rec.alpha.has_value() == (k > 0));
                CHECK(rec.sigma_res >= 0.0);
                CHECK(rec.d_soln >= 0.0);
                CHECK(ulp_distance(rec.d_soln, rec.sigma_dx * std::sqrt(20.0)) <= 4);
                if (rec.alpha && *rec.alpha < 0.0) ++negatives;
            }
            CHECK(t.negative_curvature_steps == negatives);
            if (mode == SolverMode::normal_equations) CHECK(negatives == 0);
        }
    }
    RngStream run_rng(1);
    CHECK_THROWS_AS((void)run_alg1(p, 0), ContractViolation);
    CHECK_THROWS_AS((void)run_alg2(p, 0, run_rng), ContractViolation);
}

TEST_CASE("energy is non-increasing along alg1 in normal-equations mode") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        RngStream rng(seed + 100);
        const ProblemInstance p = generate_problem(rng, 25);
        const auto [M, c] = spd_transform(p.A, p.b);
        const IterateTrace t = run_alg1(p, 30, SolverMode::normal_equations);
        for (std::size_t k = 1; k < t.records.size(); ++k) {
            CHECK(*t.records[k].alpha > 0.0);
            const double before = energy(M, c, t.records[k - 1].x);
            const double after = energy(M, c, t.records[k].x);
            CHECK(after <= before + 1e-12 * std::abs(before));
        }
    }
}

TEST_CASE("alg2 preserves the distance to the solution at every step") {
    for (const SolverMode mode : {SolverMode::raw, SolverMode::normal_equations}) {
        RngStream rng(21);
        const ProblemInstance p = generate_problem(rng, 30);
        RngStream run_rng(22);
        const IterateTrace t = run_alg2(p, 40, run_rng, mode);
        // Storing s + d v in doubles rounds every coordinate to ulp(s_j), so
        // below d ~ 1e-3 only the absolute floor eps * (||s|| + d) is attainable.
        const double eps = std::numeric_limits<double>::epsilon();
        for (std::size_t k = 1; k < t.records.size(); ++k) {
            const StepRecord& rec = t.records[k];
            REQUIRE(rec.oracle_defect.has_value());
            // Recompute d_k from the previous iterate independently of the trace.
            const StepOutcome step = sd_step(p.A, p.b, t.records[k - 1].x, mode);
            const double dk = d_soln(step.x_next, p.s);
            const double floor = 2 * eps * (norm(p.s) + dk);
            CHECK(std::abs(rec.d_soln - dk) <= 1e-12 * dk + floor);
            CHECK(*rec.oracle_defect * dk <= 1e-12 * dk + floor);
            if (dk >= 1e-3) {
                CHECK(*rec.oracle_defect <= 1e-12);
                CHECK(std::abs(rec.d_soln - dk) <= 1e-12 * dk);
            }
        }
    }
}

TEST_CASE("alg2 moves the iterate along the drawn direction") {
    RngStream rng(31);
    const ProblemInstance p = generate_problem(rng, 8);
    RngStream run_rng(32);
    RngStream replay(32);
    const IterateTrace t = run_alg2(p, 3, run_rng, SolverMode::normal_equations);
    Vector x = p.x0;
    for (std::size_t k = 1; k < t.records.size(); ++k) {
        const StepOutcome step = sd_step(p.A, p.b, x, SolverMode::normal_equations);
        const double dk = d_soln(step.x_next, p.s);
        x = p.s + dk * random_direction(replay, 8);
        CHECK(x == t.records[k].x);
    }
}

TEST_CASE("alg3 steps on the current system and then regenerates it") {
    RngStream rng(41);
    const ProblemInstance p = generate_problem(rng, 9);
    for (const SolverMode mode : {SolverMode::raw, SolverMode::normal_equations}) {
        RngStream run_rng(42);
        RngStream replay(42);
        const IterateTrace t = run_alg3(p, 6, run_rng, mode);
        DenseMatrix A = p.A;
        Vector b = p.b;
        for (std::size_t k = 1; k < t.records.size(); ++k) {
            const StepOutcome step = sd_step(A, b, t.records[k - 1].x, mode);
            CHECK(step.x_next == t.records[k].x);
            A = randn_matrix(replay, 9);
            b = matvec(A, p.s);
            CHECK(*t.records[k].oracle_defect <= 1e-8);
            // Metrics always refer to the original system.
            CHECK(t.records[k].sigma_res == sigma_res(p.A, p.b, t.records[k].x));
        }
    }
}

TEST_CASE("runs are deterministic") {
    RngStream rng(51);
    const ProblemInstance p = generate_problem(rng, 16);
    for (const Algorithm alg : {Algorithm::alg1, Algorithm::alg2, Algorithm::alg3}) {
        RngStream a(9);
        RngStream b(9);
        const IterateTrace t1 = run_algorithm(alg, p, 20, a, SolverMode::normal_equations);
        const IterateTrace t2 = run_algorithm(alg, p, 20, b, SolverMode::normal_equations);
        REQUIRE(t1.records.size() == t2.records.size());
        for (std::size_t k = 0; k < t1.records.size(); ++k) {
            CHECK(t1.records[k].x == t2.records[k].x);
            CHECK(t1.records[k].sigma_res == t2.records[k].sigma_res);
        }
    }
}

TEST_CASE("oracle variants reach deep residual reductions at N = 10 in 50 iterations") {
    std::vector<double> alg2_final;
    std::vector<double> alg3_final;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RngStream rng(RngStream::derive_seed(2022, seed));
        const ProblemInstance p = generate_problem(rng, 10);
        alg2_final.push_back(final_norm_residual(run_alg2(p, 50, rng, SolverMode::normal_equations)));
        alg3_final.push_back(final_norm_residual(run_alg3(p, 50, rng, SolverMode::normal_equations)));
    }
    std::sort(alg2_final.begin(), alg2_final.end());
    std::sort(alg3_final.begin(), alg3_final.end());
    CHECK(0.5 * (alg2_final[4] + alg2_final[5]) <= 1e-6);
    CHECK(0.5 * (alg3_final[4] + alg3_final[5]) <= 1e-7);
}

TEST_CASE("raw mode on a random matrix never crashes") {
    RngStream rng(61);
    const ProblemInstance p = generate_problem(rng, 10);
    for (const Algorithm alg : {Algorithm::alg1, Algorithm::alg2, Algorithm::alg3}) {
        RngStream run_rng(62);
        const IterateTrace t = run_algorithm(alg, p, 2000, run_rng, SolverMode::raw);
        CHECK(!t.records.empty());
        if (t.terminated_early()) CHECK(t.last_k() < 2000);
    }
}

TEST_CASE("name parsing") {
    CHECK(parse_algorithm("alg2") == Algorithm::alg2);
    CHECK(parse_algorithm("ALG3") == Algorithm::alg3);
    CHECK(parse_solver_mode("normal-equations") == SolverMode::normal_equations);
    CHECK(to_string(SolverMode::raw) == "raw");
    CHECK_THROWS_AS((void)parse_algorithm("alg4"), ConfigError);
    CHECK_THROWS_AS((void)parse_solver_mode("spd"), ConfigError);
}
