#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "sdlab/linalg.hpp"

namespace sdlab {

/// Bumped whenever the generator, the seed derivation or the normal
/// transform changes, since any of those changes every generated byte.
inline constexpr int kRngFormatVersion = 1;

/// Deterministic source of uniform and standard-normal deviates.
///
/// Engine: std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Uniforms take the top 53 bits of one engine draw, giving a value
/// in [0, 1). Normals use the Marsaglia polar method; each accepted pair
/// yields two deviates, the second cached for the next call.
///
/// Child streams are derived from (master_seed, index) through SplitMix64
/// mixing, which is a bijection on 64-bit words, so distinct indices always
/// produce distinct engine seeds.
///
/// A stream is single-owner state. Derive one per task before fanning out.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    static RngStream derived(std::uint64_t master_seed, std::uint64_t index);
    static std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1).
    double uniform();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal();

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// n independent N(0,1) deviates.
[[nodiscard]] Vector randn_vector(RngStream& rng, std::size_t n);

/// n*n independent N(0,1) deviates filled in row-major order, so the
/// flattened result equals randn_vector(rng, n*n) from the same state.
[[nodiscard]] DenseMatrix randn_matrix(RngStream& rng, std::size_t n);

}  // namespace sdlab
