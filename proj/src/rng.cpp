#include "sdlab/rng.hpp"

#include <cmath>

#include "sdlab/errors.hpp"

namespace sdlab {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RngStream::derive_seed(std::uint64_t master_seed, std::uint64_t index) {
    return splitmix64(splitmix64(master_seed) + 0x9E3779B97F4A7C15ULL * (index + 1));
}

RngStream RngStream::derived(std::uint64_t master_seed, std::uint64_t index) {
    return RngStream(derive_seed(master_seed, index));
}

double RngStream::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    double u = 0.0;
    double v = 0.0;
    double s = 0.0;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    return u * factor;
}

Vector randn_vector(RngStream& rng, std::size_t n) {
    if (n == 0) throw ContractViolation("randn_vector: n must be >= 1");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = rng.normal();
    return out;
}

DenseMatrix randn_matrix(RngStream& rng, std::size_t n) {
    if (n == 0) throw ContractViolation("randn_matrix: n must be >= 1");
    std::vector<double> entries(n * n);
    for (auto& e : entries) e = rng.normal();
    return DenseMatrix(n, std::move(entries));
}

}  // namespace sdlab
