#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace ans::stats {

/// automatic picks exact enumeration for small samples and the normal
/// approximation otherwise; the other two force one route.
enum class TestMethod { automatic, exact, normal };

/// Largest per-group size for which the rank-sum test enumerates exactly.
inline constexpr std::size_t kRankSumExactMax = 20;
/// Largest number of non-zero differences for exact signed-rank enumeration.
inline constexpr std::size_t kSignedRankExactMax = 25;

struct RankSumResult {
    double p_value = 1.0;
    double rank_sum_a = 0.0;   ///< sum of (mid)ranks of sample a in the pooled sample
    bool exact = false;
};

/// Two-sided Wilcoxon rank-sum (Mann-Whitney) test with mid-ranks for ties.
/// Exact: permutation distribution of the rank sum over all C(N, |a|)
/// assignments, ties included. Normal: tie-corrected variance with a 0.5
/// continuity correction. Both samples need at least two values.
RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b,
                            TestMethod method = TestMethod::automatic);

enum class Verdict { minus, plus, approx };

/// "-", "+" or "~".
std::string_view to_symbol(Verdict v);

struct PairwiseVerdict {
    Verdict symbol = Verdict::approx;
    double p_value = 1.0;
};

/// Judges `peer` against `reference` (minimization): minus when the peer is
/// significantly worse, plus when significantly better, approx when
/// p >= alpha. Direction comes from the sample medians, falling back to mean
/// ranks when the medians coincide.
PairwiseVerdict wilcoxon_rank_sum(std::span<const double> reference, std::span<const double> peer,
                                  double alpha = 0.05, TestMethod method = TestMethod::automatic);

struct SignedRankResult {
    double p_value = 1.0;
    double t_plus = 0.0;
    std::size_t nonzero = 0;
    bool exact = false;
};

/// Two-sided Wilcoxon signed-rank test. Zero differences are dropped, ties in
/// |d| get mid-ranks. Exact: enumeration of all 2^n sign patterns. Normal:
/// tie-corrected variance without continuity correction.
SignedRankResult signed_rank_test(std::span<const double> diffs,
                                  TestMethod method = TestMethod::automatic);

inline double wilcoxon_signed_rank(std::span<const double> diffs,
                                   TestMethod method = TestMethod::automatic)
{
    return signed_rank_test(diffs, method).p_value;
}

} // namespace ans::stats
