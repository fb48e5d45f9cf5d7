#include "ans/baselines/pso.hpp"

#include <cmath>
#include <stdexcept>

namespace ans::baselines {

namespace {

void count_eval(SwarmState& state, double fitness)
{
    ++state.evals_used;
    if (!state.evals_to_success && fitness < kSuccessThreshold) {
        state.evals_to_success = state.evals_used;
    }
}

double effective_v_max(const PsoParams& params, const SearchBounds& bounds)
{
    return params.v_max.value_or(0.5 * bounds.width());
}

} // namespace

void PsoParams::validate() const
{
    if (swarm_size < 2) {
        throw std::invalid_argument("PSO: swarm size must be at least 2");
    }
    if (!std::isfinite(w) || !std::isfinite(c1) || !std::isfinite(c2)) {
        throw std::invalid_argument("PSO: w, c1 and c2 must be finite");
    }
    if (v_max && !std::isfinite(*v_max)) {
        throw std::invalid_argument("PSO: v_max must be finite");
    }
    if (budget.max_evals < swarm_size) {
        throw std::invalid_argument("PSO: max_evals must cover the initial swarm");
    }
}

SwarmState pso_initialize(ObjectiveProblem& problem, const PsoParams& params, RngStream& rng)
{
    params.validate();
    SwarmState state;
    state.particles.resize(params.swarm_size);
    for (auto& p : state.particles) {
        p.x = init_position(rng, problem.bounds());
        p.v.assign(p.x.size(), 0.0);
        p.fitness = problem.evaluate(p.x, rng);
        count_eval(state, p.fitness);
        p.pbest = p.x;
        p.pbest_fitness = p.fitness;
        if (p.fitness < state.gbest_fitness) {
            state.gbest = p.x;
            state.gbest_fitness = p.fitness;
        }
    }
    return state;
}

void pso_step(SwarmState& state, ObjectiveProblem& problem, const PsoParams& params, RngStream& rng)
{
    const double v_max = effective_v_max(params, problem.bounds());
    if (state.evals_used >= params.budget.max_evals) {
        return;
    }
    for (auto& p : state.particles) {
        if (state.evals_used >= params.budget.max_evals) {
            break;
        }
        pso_move(p, state.gbest, params, v_max, rng);
        apply_boundary(p.x, problem.bounds(), params.boundary);
        p.fitness = problem.evaluate(p.x, rng);
        count_eval(state, p.fitness);
        if (p.fitness < p.pbest_fitness) {
            p.pbest = p.x;
            p.pbest_fitness = p.fitness;
            if (p.fitness < state.gbest_fitness) {
                state.gbest = p.x;
                state.gbest_fitness = p.fitness;
            }
        }
    }
    ++state.generation;
}

RunResult run_pso(ObjectiveProblem& problem, const PsoParams& params, std::uint64_t seed,
                  std::span<const std::uint64_t> snapshot_gens)
{
    RngStream rng(seed);
    SwarmState state = pso_initialize(problem, params, rng);
    RunResult result;
    result.seed = seed;
    auto observe = [&] {
        result.history.push_back({state.evals_used, state.gbest_fitness});
        if (std::find(snapshot_gens.begin(), snapshot_gens.end(), state.generation) !=
            snapshot_gens.end()) {
            Snapshot snap;
            snap.generation = state.generation;
            for (const auto& p : state.particles) {
                snap.positions.push_back(p.x);
                snap.superiors.push_back(p.pbest);
            }
            result.snapshots.push_back(std::move(snap));
        }
    };
    observe();
    while (state.evals_used < params.budget.max_evals &&
           (!params.budget.max_generations || state.generation < *params.budget.max_generations)) {
        pso_step(state, problem, params, rng);
        observe();
    }
    result.best_fitness = state.gbest_fitness;
    result.best_position = state.gbest;
    result.evals_to_success = state.evals_to_success;
    result.evals_used = state.evals_used;
    result.generations = state.generation;
    return result;
}

} // namespace ans::baselines
