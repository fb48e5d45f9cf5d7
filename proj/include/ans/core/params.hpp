#pragma once

#include "ans/core/bounds.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace ans {

/// Termination controls shared by every optimizer. max_evals is
/// authoritative; max_generations counts generations after the initial
/// population (generation 0).
struct Budget {
    std::uint64_t max_evals = 300000;
    std::optional<std::uint64_t> max_generations;
};

/// How an individual reads the superior collection R during a generation.
/// live: sees superiors already improved earlier in the same sweep.
/// frozen: sees the collection as it stood at the start of the generation.
enum class SuperiorMode { live, frozen };

SuperiorMode parse_superior_mode(std::string_view text);
std::string_view to_string(SuperiorMode mode);

struct AnsParams {
    std::size_t m = 20;      ///< population size
    std::size_t c = 20;      ///< superior collection cardinality, must equal m
    std::size_t n = 1;       ///< across-search degree, 0 <= n <= D
    double sigma = 0.5;      ///< standard deviation of the Gaussian
    Budget budget;
    BoundaryPolicy boundary = BoundaryPolicy::clamp;
    SuperiorMode superior_mode = SuperiorMode::live;

    /// Throws std::invalid_argument when an invariant is broken for a problem
    /// of dimensionality dim.
    void validate(std::size_t dim) const;
};

/// Positions and superior solutions of every individual at one generation.
struct Snapshot {
    std::uint64_t generation = 0;
    std::vector<std::vector<double>> positions;
    std::vector<std::vector<double>> superiors;
};

struct HistorySample {
    std::uint64_t evals_used = 0;
    double best_fitness = 0.0;

    bool operator==(const HistorySample&) const = default;
};

/// Outcome of one optimizer run. Shared by ANS and the baselines so the
/// harness treats them uniformly.
struct RunResult {
    double best_fitness = 0.0;
    std::vector<double> best_position;
    std::optional<std::uint64_t> evals_to_success;
    std::uint64_t evals_used = 0;
    std::uint64_t generations = 0;
    std::vector<HistorySample> history;
    std::vector<Snapshot> snapshots;
    std::uint64_t seed = 0;
};

} // namespace ans
