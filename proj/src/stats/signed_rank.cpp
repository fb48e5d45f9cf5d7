#include "ans/stats/wilcoxon.hpp"

#include "ranks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ans::stats {

SignedRankResult signed_rank_test(std::span<const double> diffs, TestMethod method)
{
    std::vector<double> magnitude;
    std::vector<bool> positive;
    for (double d : diffs) {
        if (std::isnan(d)) {
            throw std::invalid_argument("signed_rank_test: NaN difference");
        }
        if (d != 0.0) {
            magnitude.push_back(std::abs(d));
            positive.push_back(d > 0.0);
        }
    }
    SignedRankResult result;
    result.nonzero = magnitude.size();
    if (magnitude.empty()) {
        return result;
    }
    const auto ranked = detail::doubled_midranks(magnitude);
    const std::size_t n = magnitude.size();

    std::int64_t t2 = 0;
    std::int64_t total2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        total2 += ranked.ranks[i];
        if (positive[i]) {
            t2 += ranked.ranks[i];
        }
    }
    result.t_plus = 0.5 * static_cast<double>(t2);

    const bool exact = method == TestMethod::exact ||
                       (method == TestMethod::automatic && n <= kSignedRankExactMax);
    if (exact) {
        if (n > 63) {
            throw std::invalid_argument("signed_rank_test: too many differences for exact enumeration");
        }
        // ways[s]: sign patterns whose positive doubled-rank sum is s.
        std::vector<std::uint64_t> ways(static_cast<std::size_t>(total2) + 1, 0);
        ways[0] = 1;
        for (std::size_t i = 0; i < n; ++i) {
            const auto r = static_cast<std::size_t>(ranked.ranks[i]);
            for (std::size_t s = ways.size(); s-- > r;) {
                ways[s] += ways[s - r];
            }
        }
        const std::int64_t dev = std::llabs(2 * t2 - total2);
        std::uint64_t extreme = 0;
        for (std::size_t s = 0; s < ways.size(); ++s) {
            if (std::llabs(2 * static_cast<std::int64_t>(s) - total2) >= dev) {
                extreme += ways[s];
            }
        }
        const double patterns = std::ldexp(1.0, static_cast<int>(n));
        result.exact = true;
        result.p_value = std::min(1.0, static_cast<double>(extreme) / patterns);
        return result;
    }

    const double nn = static_cast<double>(n);
    const double mu = nn * (nn + 1.0) / 4.0;
    const double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - ranked.tie_term / 48.0;
    if (var <= 0.0) {
        return result;
    }
    const double z = (result.t_plus - mu) / std::sqrt(var);
    result.p_value = std::min(1.0, std::erfc(std::abs(z) / std::numbers::sqrt2));
    return result;
}

} // namespace ans::stats
