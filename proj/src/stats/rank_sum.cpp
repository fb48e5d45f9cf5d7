#include "ans/stats/wilcoxon.hpp"

#include "ans/stats/summary.hpp"
#include "ranks.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ans::stats {

namespace {

// P(|S - E| >= |s_obs - E|) over all size-n1 subsets of the pooled doubled
// ranks, counted by dynamic programming on (subset size, rank sum).
double exact_rank_sum_p(const std::vector<std::int64_t>& ranks, std::size_t n1, std::int64_t observed)
{
    const std::size_t total_n = ranks.size();
    std::int64_t max_sum = 0;
    for (auto r : ranks) {
        max_sum += r;
    }
    const auto width = static_cast<std::size_t>(max_sum + 1);
    std::vector<std::vector<std::uint64_t>> ways(n1 + 1, std::vector<std::uint64_t>(width, 0));
    ways[0][0] = 1;
    for (std::size_t item = 0; item < total_n; ++item) {
        const auto r = static_cast<std::size_t>(ranks[item]);
        const std::size_t k_hi = std::min(n1, item + 1);
        for (std::size_t k = k_hi; k >= 1; --k) {
            auto& dst = ways[k];
            const auto& src = ways[k - 1];
            for (std::size_t s = width; s-- > r;) {
                dst[s] += src[s - r];
            }
        }
    }
    // E[S] in doubled units is n1 (N + 1).
    const auto expected = static_cast<std::int64_t>(n1 * (total_n + 1));
    const std::int64_t dev = std::llabs(observed - expected);
    std::uint64_t extreme = 0;
    std::uint64_t all = 0;
    for (std::size_t s = 0; s < width; ++s) {
        const std::uint64_t c = ways[n1][s];
        all += c;
        if (std::llabs(static_cast<std::int64_t>(s) - expected) >= dev) {
            extreme += c;
        }
    }
    return std::min(1.0, static_cast<double>(extreme) / static_cast<double>(all));
}

double normal_two_sided(double z)
{
    return std::erfc(std::abs(z) / std::numbers::sqrt2);
}

} // namespace

std::string_view to_symbol(Verdict v)
{
    switch (v) {
    case Verdict::minus: return "-";
    case Verdict::plus: return "+";
    case Verdict::approx: break;
    }
    return "~";
}

RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b, TestMethod method)
{
    if (a.size() < 2 || b.size() < 2) {
        throw std::invalid_argument("rank_sum_test: each sample needs at least two values");
    }
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const auto ranked = detail::doubled_midranks(pooled);

    std::int64_t s2 = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s2 += ranked.ranks[i];
    }
    RankSumResult result;
    result.rank_sum_a = 0.5 * static_cast<double>(s2);

    const bool exact = method == TestMethod::exact ||
                       (method == TestMethod::automatic && a.size() <= kRankSumExactMax &&
                        b.size() <= kRankSumExactMax);
    if (exact) {
        result.exact = true;
        result.p_value = exact_rank_sum_p(ranked.ranks, a.size(), s2);
        return result;
    }

    const double n1 = static_cast<double>(a.size());
    const double n2 = static_cast<double>(b.size());
    const double n = n1 + n2;
    const double u = result.rank_sum_a - n1 * (n1 + 1.0) / 2.0;
    const double mu = n1 * n2 / 2.0;
    const double var = n1 * n2 / 12.0 * ((n + 1.0) - ranked.tie_term / (n * (n - 1.0)));
    if (var <= 0.0) {
        result.p_value = 1.0;
        return result;
    }
    const double z = std::max(0.0, std::abs(u - mu) - 0.5) / std::sqrt(var);
    result.p_value = std::min(1.0, normal_two_sided(z));
    return result;
}

PairwiseVerdict wilcoxon_rank_sum(std::span<const double> reference, std::span<const double> peer,
                                  double alpha, TestMethod method)
{
    const auto test = rank_sum_test(reference, peer, method);
    PairwiseVerdict v;
    v.p_value = test.p_value;
    if (test.p_value >= alpha) {
        v.symbol = Verdict::approx;
        return v;
    }
    const double med_ref = median(reference);
    const double med_peer = median(peer);
    bool peer_worse;
    if (med_peer != med_ref) {
        peer_worse = med_peer > med_ref;
    } else {
        const double n = static_cast<double>(reference.size() + peer.size());
        const double total = n * (n + 1.0) / 2.0;
        const double mean_rank_ref = test.rank_sum_a / static_cast<double>(reference.size());
        const double mean_rank_peer = (total - test.rank_sum_a) / static_cast<double>(peer.size());
        if (mean_rank_peer == mean_rank_ref) {
            v.symbol = Verdict::approx;
            return v;
        }
        peer_worse = mean_rank_peer > mean_rank_ref;
    }
    v.symbol = peer_worse ? Verdict::minus : Verdict::plus;
    return v;
}

} // namespace ans::stats
