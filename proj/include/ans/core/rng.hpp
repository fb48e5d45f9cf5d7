#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>

namespace ans {

/// SplitMix64 finalizer over a pair of words. Used to derive independent
/// substream seeds from (parent seed, stream index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Explicitly seeded random stream backed by a 64-bit Mersenne Twister.
///
/// Draw order is part of the contract: every uniform consumes exactly one
/// engine word, every Gaussian consumes exactly two uniforms (Box-Muller,
/// cosine branch, no cached second variate), and bounded integers use
/// rejection on whole engine words. Identical seeds therefore give identical
/// sequences for any interleaving of uniform and Gaussian calls.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform01();

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer on [0, n). n must be positive.
    std::size_t uniform_index(std::size_t n);

    double standard_normal();

    /// Draw from N(0, sigma^2). sigma must be non-negative; sigma == 0 yields
    /// exactly +0.0 but still consumes the two underlying uniforms.
    double gaussian(double sigma);

    /// Independent child stream, deterministic in (seed(), stream).
    RngStream split(std::uint64_t stream) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Free-function form of RngStream::gaussian, rejecting negative sigma.
double gaussian_sample(RngStream& rng, double sigma);

/// Anything that can drive the stochastic update rules. RngStream models it;
/// tests substitute scripted samplers.
template <class S>
concept Sampler = requires(S& s, std::size_t n, double sigma) {
    { s.uniform01() } -> std::convertible_to<double>;
    { s.uniform_index(n) } -> std::convertible_to<std::size_t>;
    { s.gaussian(sigma) } -> std::convertible_to<double>;
};

static_assert(Sampler<RngStream>);

} // namespace ans
