#include "ans/baselines/de.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ans::baselines {

namespace {

void count_eval(DePopulation& state, double fitness)
{
    ++state.evals_used;
    if (!state.evals_to_success && fitness < kSuccessThreshold) {
        state.evals_to_success = state.evals_used;
    }
}

void refresh_best(DePopulation& state)
{
    const auto it = std::min_element(state.fitness.begin(), state.fitness.end());
    const auto i = static_cast<std::size_t>(it - state.fitness.begin());
    if (*it < state.best_fitness) {
        state.best_fitness = *it;
        state.best = state.x[i];
    }
}

} // namespace

void DeParams::validate() const
{
    if (pop_size < 4) {
        throw std::invalid_argument("DE: population size must be at least 4");
    }
    if (!std::isfinite(F)) {
        throw std::invalid_argument("DE: F must be finite");
    }
    if (!(CR >= 0.0 && CR <= 1.0)) {
        throw std::invalid_argument("DE: CR must lie in [0, 1]");
    }
    if (budget.max_evals < pop_size) {
        throw std::invalid_argument("DE: max_evals must cover the initial population");
    }
}

DePopulation de_initialize(ObjectiveProblem& problem, const DeParams& params, RngStream& rng)
{
    params.validate();
    DePopulation state;
    state.best_fitness = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < params.pop_size; ++i) {
        state.x.push_back(init_position(rng, problem.bounds()));
        state.fitness.push_back(problem.evaluate(state.x.back(), rng));
        count_eval(state, state.fitness.back());
    }
    refresh_best(state);
    return state;
}

void de_step(DePopulation& state, ObjectiveProblem& problem, const DeParams& params, RngStream& rng)
{
    if (state.evals_used >= params.budget.max_evals) {
        return;
    }
    auto next_x = state.x;
    auto next_f = state.fitness;
    for (std::size_t i = 0; i < state.x.size(); ++i) {
        if (state.evals_used >= params.budget.max_evals) {
            break;
        }
        Trial t = de_trial(std::span<const std::vector<double>>(state.x), i, params, rng);
        apply_boundary(t.trial, problem.bounds(), params.boundary);
        const double f = problem.evaluate(t.trial, rng);
        count_eval(state, f);
        if (f <= state.fitness[i]) {
            next_x[i] = std::move(t.trial);
            next_f[i] = f;
        }
    }
    state.x = std::move(next_x);
    state.fitness = std::move(next_f);
    refresh_best(state);
    ++state.generation;
}

RunResult run_de(ObjectiveProblem& problem, const DeParams& params, std::uint64_t seed,
                 std::span<const std::uint64_t> snapshot_gens)
{
    RngStream rng(seed);
    DePopulation state = de_initialize(problem, params, rng);
    RunResult result;
    result.seed = seed;
    auto observe = [&] {
        result.history.push_back({state.evals_used, state.best_fitness});
        if (std::find(snapshot_gens.begin(), snapshot_gens.end(), state.generation) !=
            snapshot_gens.end()) {
            // DE keeps no separate memory, so the population doubles as its superiors.
            result.snapshots.push_back({state.generation, state.x, state.x});
        }
    };
    observe();
    while (state.evals_used < params.budget.max_evals &&
           (!params.budget.max_generations || state.generation < *params.budget.max_generations)) {
        de_step(state, problem, params, rng);
        observe();
    }
    result.best_fitness = state.best_fitness;
    result.best_position = state.best;
    result.evals_to_success = state.evals_to_success;
    result.evals_used = state.evals_used;
    result.generations = state.generation;
    return result;
}

} // namespace ans::baselines
