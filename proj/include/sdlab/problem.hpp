#pragma once

#include <cstdint>
#include <utility>

#include "sdlab/linalg.hpp"
#include "sdlab/rng.hpp"

namespace sdlab {

/// Norm of the generated solution point.
inline constexpr double kSolutionRadius = 10.0;
/// Starting distances are drawn from Uniform(kMinStartDistance, kMaxStartDistance).
inline constexpr double kMinStartDistance = 1.0;
inline constexpr double kMaxStartDistance = 10.0;

/// One generated experiment. `s` is the known solution; solvers only use it
/// for oracle moves and for characterizing iterates.
struct ProblemInstance {
    DenseMatrix A;
    Vector b;
    Vector s;
    Vector x0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

/// Random unit vector from N(0,1) deviates. A degenerate draw is retried with
/// the next deviates up to three times before DegenerateDirection escapes.
[[nodiscard]] Vector random_direction(RngStream& rng, std::size_t n);

/// Draws a direction and then a distance d0 ~ U(1, 10), returning s + d0 * direction.
[[nodiscard]] Vector draw_starting_point(RngStream& rng, const Vector& s);

/// Builds a random problem. Draw order: direction of s, then A (row-major),
/// then the x0 direction, then d0.
[[nodiscard]] ProblemInstance generate_problem(RngStream& rng, std::size_t n);

/// s + d0 * normalize(direction)
[[nodiscard]] Vector starting_point_at(const Vector& s, const Vector& direction, double d0);

/// Normal-equations form (A^T A, A^T b). The matrix is symmetrized as
/// (M + M^T) / 2 so that it is exactly symmetric.
[[nodiscard]] std::pair<DenseMatrix, Vector> spd_transform(const DenseMatrix& A, const Vector& b);

}  // namespace sdlab
