#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ans::stats {

/// One row of a results table for one algorithm on one function.
struct FunctionSummary {
    double mean = 0.0;
    double std = 0.0;            ///< sample standard deviation (divisor n - 1)
    double success_rate = 0.0;   ///< successes / runs
    std::optional<double> mean_nfe;  ///< over successful runs only
    int rank = 1;
    std::size_t runs = 0;
    std::size_t successes = 0;
};

/// nfe[i] holds the evaluations-to-success of run i, or nullopt if the run
/// never reached the success threshold. Throws on empty or mismatched input.
FunctionSummary summarize(std::span<const double> final_fitnesses,
                          std::span<const std::optional<std::uint64_t>> nfe);

/// Competition ranking of means: smaller is better, exact ties share the
/// smallest rank ({0, 0, 5} -> {1, 1, 3}).
std::vector<int> rank_algorithms(std::span<const double> means);

double median(std::span<const double> values);

} // namespace ans::stats
