#include "sdlab/problem.hpp"

#include "sdlab/errors.hpp"

namespace sdlab {

namespace {
constexpr int kDirectionRetries = 3;
}

Vector random_direction(RngStream& rng, std::size_t n) {
    for (int attempt = 0;; ++attempt) {
        try {
            return normalize(randn_vector(rng, n));
        } catch (const DegenerateDirection&) {
            if (attempt == kDirectionRetries) throw;
        }
    }
}

Vector draw_starting_point(RngStream& rng, const Vector& s) {
    const Vector direction = random_direction(rng, s.size());
    const double d0 = rng.uniform(kMinStartDistance, kMaxStartDistance);
    return starting_point_at(s, direction, d0);
}

ProblemInstance generate_problem(RngStream& rng, std::size_t n) {
    if (n < 2) throw ContractViolation("generate_problem: n must be >= 2");
    ProblemInstance p;
    p.n = n;
    p.seed = rng.seed();
    p.s = kSolutionRadius * random_direction(rng, n);
    p.A = randn_matrix(rng, n);
    p.b = matvec(p.A, p.s);
    p.x0 = draw_starting_point(rng, p.s);
    return p;
}

Vector starting_point_at(const Vector& s, const Vector& direction, double d0) {
    if (!(d0 > 0.0)) throw ContractViolation("starting_point_at: d0 must be positive");
    if (direction.size() != s.size()) {
        throw ContractViolation("starting_point_at: dimension mismatch");
    }
    Vector x = s;
    axpy(d0, normalize(direction), x);
    return x;
}

std::pair<DenseMatrix, Vector> spd_transform(const DenseMatrix& A, const Vector& b) {
    if (A.dim() != b.size()) throw ContractViolation("spd_transform: dimension mismatch");
    DenseMatrix m = transposed_product(A, A);
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (m(i, j) + m(j, i));
            m(i, j) = avg;
            m(j, i) = avg;
        }
    }
    return {std::move(m), matvec_transposed(A, b)};
}

}  // namespace sdlab
