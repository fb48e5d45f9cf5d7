#pragma once

#include "ans/core/bounds.hpp"
#include "ans/core/params.hpp"
#include "ans/core/problem.hpp"
#include "ans/core/rng.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ans::baselines {

/// Canonical DE/rand/1/bin.
struct DeParams {
    std::size_t pop_size = 100;
    double F = 0.5;
    double CR = 0.9;
    Budget budget;
    BoundaryPolicy boundary = BoundaryPolicy::clamp;

    void validate() const;
};

struct DePopulation {
    std::vector<std::vector<double>> x;
    std::vector<double> fitness;
    std::vector<double> best;
    double best_fitness = 0.0;
    std::uint64_t generation = 0;
    std::uint64_t evals_used = 0;
    std::optional<std::uint64_t> evals_to_success;
};

struct Trial {
    std::array<std::size_t, 3> r{};   ///< base and difference indices
    std::vector<double> donor;
    std::vector<double> trial;
};

/// Three distinct indices in [0, np), all different from target, drawn by
/// rejection in the order r1, r2, r3.
template <Sampler S>
std::array<std::size_t, 3> pick_distinct(S& rng, std::size_t np, std::size_t target)
{
    if (np < 4) {
        throw std::invalid_argument("DE: rand/1 needs at least four vectors");
    }
    std::array<std::size_t, 3> r{};
    for (std::size_t k = 0; k < 3; ++k) {
        std::size_t c;
        bool clash;
        do {
            c = rng.uniform_index(np);
            clash = c == target;
            for (std::size_t j = 0; j < k; ++j) {
                clash = clash || c == r[j];
            }
        } while (clash);
        r[k] = c;
    }
    return r;
}

/// donor = x_r1 + F (x_r2 - x_r3); binomial crossover with one forced
/// dimension jrand (drawn before the per-dimension uniforms).
template <Sampler S>
Trial de_trial(std::span<const std::vector<double>> pop, std::size_t target, const DeParams& params,
               S& rng)
{
    Trial t;
    t.r = pick_distinct(rng, pop.size(), target);
    const auto& a = pop[t.r[0]];
    const auto& b = pop[t.r[1]];
    const auto& c = pop[t.r[2]];
    const std::size_t dim = a.size();
    t.donor.resize(dim);
    for (std::size_t d = 0; d < dim; ++d) {
        t.donor[d] = a[d] + params.F * (b[d] - c[d]);
    }
    const std::size_t jrand = rng.uniform_index(dim);
    t.trial = pop[target];
    for (std::size_t d = 0; d < dim; ++d) {
        if (rng.uniform01() < params.CR || d == jrand) {
            t.trial[d] = t.donor[d];
        }
    }
    return t;
}

DePopulation de_initialize(ObjectiveProblem& problem, const DeParams& params, RngStream& rng);

/// One synchronous generation: all trials built from the current population,
/// each replacing its target when no worse.
void de_step(DePopulation& state, ObjectiveProblem& problem, const DeParams& params, RngStream& rng);

RunResult run_de(ObjectiveProblem& problem, const DeParams& params, std::uint64_t seed,
                 std::span<const std::uint64_t> snapshot_gens = {});

} // namespace ans::baselines
