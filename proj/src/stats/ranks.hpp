#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace ans::stats::detail {

/// Twice the mid-rank of every value (ranks start at 1), so tied groups stay
/// integral. Also returns the tie term sum(t^3 - t) over tied groups.
struct DoubledRanks {
    std::vector<std::int64_t> ranks;
    double tie_term = 0.0;
};

inline DoubledRanks doubled_midranks(std::span<const double> values)
{
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return values[l] < values[r]; });
    DoubledRanks out;
    out.ranks.resize(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && values[order[j]] == values[order[i]]) {
            ++j;
        }
        // positions i..j-1 (0-based) share rank ((i+1) + j) / 2
        const auto doubled = static_cast<std::int64_t>(i + j + 1);
        for (std::size_t k = i; k < j; ++k) {
            out.ranks[order[k]] = doubled;
        }
        const double t = static_cast<double>(j - i);
        out.tie_term += t * t * t - t;
        i = j;
    }
    return out;
}

} // namespace ans::stats::detail
