#include "ans/engine/ans.hpp"

#include <algorithm>

namespace ans::engine {

namespace {

bool budget_left(const PopulationState& state, const AnsParams& params)
{
    return state.evals_used < params.budget.max_evals;
}

void record_evaluation(PopulationState& state, double fitness)
{
    ++state.evals_used;
    if (!state.evals_to_success && fitness < kSuccessThreshold) {
        state.evals_to_success = state.evals_used;
    }
}

Snapshot take_snapshot(const PopulationState& state)
{
    Snapshot snap;
    snap.generation = state.generation;
    for (const auto& ind : state.individuals) {
        snap.positions.push_back(ind.pos);
        snap.superiors.push_back(ind.superior);
    }
    return snap;
}

} // namespace

bool update_superior(Individual& indiv, std::vector<double> new_pos, double new_fitness)
{
    const bool improved = new_fitness < indiv.superior_fitness;
    if (improved) {
        indiv.superior = new_pos;
        indiv.superior_fitness = new_fitness;
    }
    indiv.pos = std::move(new_pos);
    indiv.pos_fitness = new_fitness;
    return improved;
}

PopulationState initialize(ObjectiveProblem& problem, const AnsParams& params, RngStream& rng)
{
    params.validate(problem.dim());
    PopulationState state;
    state.individuals.resize(params.m);
    for (auto& ind : state.individuals) {
        ind.pos = init_position(rng, problem.bounds());
        ind.pos_fitness = problem.evaluate(ind.pos, rng);
        record_evaluation(state, ind.pos_fitness);
        ind.superior = ind.pos;
        ind.superior_fitness = ind.pos_fitness;
        if (ind.superior_fitness < state.global_best_fitness) {
            state.global_best = ind.superior;
            state.global_best_fitness = ind.superior_fitness;
        }
    }
    return state;
}

void step(PopulationState& state, ObjectiveProblem& problem, const AnsParams& params, RngStream& rng)
{
    if (!budget_left(state, params)) {
        return;
    }
    std::vector<Individual> frozen;
    std::span<const Individual> superiors = state.individuals;
    if (params.superior_mode == SuperiorMode::frozen) {
        frozen = state.individuals;
        superiors = frozen;
    }
    for (std::size_t i = 0; i < state.individuals.size() && budget_left(state, params); ++i) {
        Individual& ind = state.individuals[i];
        auto next = update_position(ind, superiors, i, params, problem.bounds(), rng);
        const double fitness = problem.evaluate(next, rng);
        record_evaluation(state, fitness);
        if (update_superior(ind, std::move(next), fitness) &&
            ind.superior_fitness < state.global_best_fitness) {
            state.global_best = ind.superior;
            state.global_best_fitness = ind.superior_fitness;
        }
    }
    ++state.generation;
}

RunResult run(ObjectiveProblem& problem, const AnsParams& params, std::uint64_t seed,
              std::span<const std::uint64_t> snapshot_gens)
{
    RngStream rng(seed);
    PopulationState state = initialize(problem, params, rng);

    RunResult result;
    result.seed = seed;
    auto wants_snapshot = [&](std::uint64_t gen) {
        return std::find(snapshot_gens.begin(), snapshot_gens.end(), gen) != snapshot_gens.end();
    };
    auto observe = [&] {
        result.history.push_back({state.evals_used, state.global_best_fitness});
        if (wants_snapshot(state.generation)) {
            result.snapshots.push_back(take_snapshot(state));
        }
    };

    observe();
    const auto& budget = params.budget;
    while (budget_left(state, params) &&
           (!budget.max_generations || state.generation < *budget.max_generations)) {
        step(state, problem, params, rng);
        observe();
    }

    result.best_fitness = state.global_best_fitness;
    result.best_position = state.global_best;
    result.evals_to_success = state.evals_to_success;
    result.evals_used = state.evals_used;
    result.generations = state.generation;
    return result;
}

} // namespace ans::engine
