#pragma once

#include <cstdint>
#include <random>

namespace ptwh {

/// splitmix64 finalizer. Bijective 64-bit mixing function.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Derives the seed for ensemble member `index` from `base_seed`.
/// Splittable: members can be sampled in parallel in any order and
/// always see the same stream.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) noexcept;

/// Deterministic Gaussian stream. Uniforms are taken directly from the
/// engine output (53-bit mantissa) and fed through Box-Muller, so the
/// values depend only on the seed, never on the standard library's
/// distribution internals.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(mix64(seed)) {}

    /// Uniform double in (0, 1].
    double uniform01();

    /// Standard normal draw, mean 0, variance 1.
    double gaussian();

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace ptwh
