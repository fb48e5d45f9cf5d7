#pragma once

// Test-only helpers: a scripted sampler and brute-force oracles for the
// nonparametric tests. The oracles rank naively and enumerate every
// assignment, sharing no code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

namespace ans::testing {

/// Replays queued values; an empty queue falls back to the given constants.
struct ScriptedSampler {
    std::deque<double> uniforms;
    std::deque<std::size_t> indices;
    std::deque<double> gaussians;
    double default_uniform = 0.5;
    double default_gaussian = 0.0;
    std::size_t gaussian_calls = 0;
    std::size_t index_calls = 0;

    double uniform01()
    {
        if (uniforms.empty()) {
            return default_uniform;
        }
        const double v = uniforms.front();
        uniforms.pop_front();
        return v;
    }

    std::size_t uniform_index(std::size_t n)
    {
        ++index_calls;
        if (indices.empty()) {
            return 0;
        }
        const std::size_t v = indices.front();
        indices.pop_front();
        if (v >= n) {
            throw std::logic_error("scripted index out of range");
        }
        return v;
    }

    double gaussian(double /*sigma*/)
    {
        ++gaussian_calls;
        if (gaussians.empty()) {
            return default_gaussian;
        }
        const double v = gaussians.front();
        gaussians.pop_front();
        return v;
    }
};

inline std::vector<double> naive_midranks(const std::vector<double>& v)
{
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        double less = 0.0;
        double equal = 0.0;
        for (double x : v) {
            less += x < v[i] ? 1.0 : 0.0;
            equal += x == v[i] ? 1.0 : 0.0;
        }
        r[i] = less + (equal + 1.0) / 2.0;
    }
    return r;
}

/// Two-sided permutation p-value of the rank sum of a: the share of all
/// C(N, |a|) subsets whose rank sum is at least as far from its mean.
inline double rank_sum_oracle(const std::vector<double>& a, const std::vector<double>& b)
{
    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    const auto ranks = naive_midranks(pooled);
    const std::size_t n = pooled.size();
    const std::size_t k = a.size();
    double observed = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        observed += ranks[i];
    }
    const double expected = static_cast<double>(k) * static_cast<double>(n + 1) / 2.0;
    const double dev = std::abs(observed - expected);
    std::uint64_t extreme = 0;
    std::uint64_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) {
            continue;
        }
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                s += ranks[i];
            }
        }
        ++total;
        if (std::abs(s - expected) >= dev) {
            ++extreme;
        }
    }
    return static_cast<double>(extreme) / static_cast<double>(total);
}

/// Two-sided signed-rank p-value over all 2^n sign patterns of the non-zero
/// differences.
inline double signed_rank_oracle(const std::vector<double>& diffs)
{
    std::vector<double> mags;
    std::vector<bool> pos;
    for (double d : diffs) {
        if (d != 0.0) {
            mags.push_back(std::abs(d));
            pos.push_back(d > 0.0);
        }
    }
    const std::size_t n = mags.size();
    if (n == 0) {
        return 1.0;
    }
    const auto ranks = naive_midranks(mags);
    double total = 0.0;
    double observed = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        total += ranks[i];
        if (pos[i]) {
            observed += ranks[i];
        }
    }
    const double dev = std::abs(observed - total / 2.0);
    std::uint64_t extreme = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        double t = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                t += ranks[i];
            }
        }
        if (std::abs(t - total / 2.0) >= dev) {
            ++extreme;
        }
    }
    return static_cast<double>(extreme) / std::ldexp(1.0, static_cast<int>(n));
}

/// Finner step-down APVs by the textbook definition, in input order.
inline std::vector<double> finner_oracle(const std::vector<double>& p)
{
    const std::size_t k = p.size();
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        // position of p[i] in ascending order (stable for ties)
        std::size_t rank_i = 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (p[j] < p[i] || (p[j] == p[i] && j < i)) {
                ++rank_i;
            }
        }
        double best = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t rank_j = 1;
            for (std::size_t l = 0; l < k; ++l) {
                if (p[l] < p[j] || (p[l] == p[j] && l < j)) {
                    ++rank_j;
                }
            }
            if (rank_j <= rank_i) {
                const double v = 1.0 - std::pow(1.0 - p[j], static_cast<double>(k) / static_cast<double>(rank_j));
                best = std::max(best, v);
            }
        }
        out[i] = std::min(1.0, best);
    }
    return out;
}

} // namespace ans::testing
