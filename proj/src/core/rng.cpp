#include "ans/core/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ans {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(mix_seed(seed, 0)) {}

double RngStream::uniform01()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi)
{
    return lo + (hi - lo) * uniform01();
}

std::size_t RngStream::uniform_index(std::size_t n)
{
    if (n == 0) {
        throw std::invalid_argument("uniform_index: empty range");
    }
    const auto bound = static_cast<std::uint64_t>(n);
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return static_cast<std::size_t>(x % bound);
}

double RngStream::standard_normal()
{
    // u1 in (0, 1] keeps log finite.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::gaussian(double sigma)
{
    if (sigma < 0.0) {
        throw std::invalid_argument("gaussian: negative standard deviation");
    }
    const double z = standard_normal();
    return sigma == 0.0 ? 0.0 : sigma * z;
}

RngStream RngStream::split(std::uint64_t stream) const
{
    return RngStream(mix_seed(seed_, stream));
}

double gaussian_sample(RngStream& rng, double sigma)
{
    return rng.gaussian(sigma);
}

} // namespace ans
