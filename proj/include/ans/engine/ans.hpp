#pragma once

// Across neighbourhood search.
//
// Each individual i keeps its current position pos_i and its best-so-far
// position r_i (its superior solution); the superiors of all m individuals
// form the collection R (so c = m). Per generation, every individual draws a
// set N of n distinct dimensions and moves, coordinate by coordinate, to
//
//   pos_i^d = r_i^d    + G(0, sigma^2) * |r_i^d    - pos_i^d|   for d not in N
//   pos_i^d = r_g(d)^d + G(0, sigma^2) * |r_g(d)^d - pos_i^d|   for d in N
//
// with g(d) != i a peer drawn afresh for each selected dimension and a fresh
// Gaussian per coordinate. The new position is evaluated, replaces r_i only
// on strict improvement, and refreshes the global best likewise.
//
// Draw order per individual (the determinism contract): n bounded integers
// for the partial Fisher-Yates selection of N, then for d = 0..D-1 one peer
// index (only if d is in N) followed by one Gaussian.

#include "ans/core/bounds.hpp"
#include "ans/core/params.hpp"
#include "ans/core/problem.hpp"
#include "ans/core/rng.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ans::engine {

struct Individual {
    std::vector<double> pos;
    double pos_fitness = std::numeric_limits<double>::infinity();
    std::vector<double> superior;
    double superior_fitness = std::numeric_limits<double>::infinity();
};

struct PopulationState {
    std::vector<Individual> individuals;
    std::vector<double> global_best;
    double global_best_fitness = std::numeric_limits<double>::infinity();
    std::uint64_t generation = 0;
    std::uint64_t evals_used = 0;
    std::optional<std::uint64_t> evals_to_success;
};

/// n distinct dimension indices in [0, dim), uniform without replacement.
template <Sampler S>
std::vector<std::size_t> select_across_dimensions(S& rng, std::size_t dim, std::size_t n)
{
    if (n > dim) {
        throw std::invalid_argument("select_across_dimensions: n exceeds dimensionality");
    }
    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = k + static_cast<std::size_t>(rng.uniform_index(dim - k));
        std::swap(order[k], order[j]);
    }
    order.resize(n);
    return order;
}

/// Uniform peer index in [0, c) excluding self_index.
template <Sampler S>
std::size_t select_peer_superior(S& rng, std::size_t c, std::size_t self_index)
{
    if (c < 2) {
        throw std::invalid_argument("select_peer_superior: no peer exists when c < 2");
    }
    if (self_index >= c) {
        throw std::invalid_argument("select_peer_superior: self index out of range");
    }
    const auto k = static_cast<std::size_t>(rng.uniform_index(c - 1));
    return k >= self_index ? k + 1 : k;
}

/// One across-neighbourhood move for a given selection N, before any boundary
/// handling. Superiors are read from `superiors`; `indiv` supplies pos_i and
/// its own r_i. r_i is never read on dimensions in N.
template <Sampler S>
std::vector<double> across_move(const Individual& indiv, std::span<const Individual> superiors,
                                std::size_t self_index, std::span<const std::size_t> across_dims,
                                double sigma, S& rng)
{
    const std::size_t dim = indiv.pos.size();
    std::vector<bool> in_n(dim, false);
    for (std::size_t d : across_dims) {
        in_n.at(d) = true;
    }
    std::vector<double> next(dim);
    for (std::size_t d = 0; d < dim; ++d) {
        double centre;
        if (in_n[d]) {
            const std::size_t g = select_peer_superior(rng, superiors.size(), self_index);
            centre = superiors[g].superior[d];
        } else {
            centre = indiv.superior[d];
        }
        next[d] = centre + rng.gaussian(sigma) * std::abs(centre - indiv.pos[d]);
    }
    return next;
}

/// Selects N, applies across_move and the boundary policy.
template <Sampler S>
std::vector<double> update_position(const Individual& indiv, std::span<const Individual> superiors,
                                    std::size_t self_index, const AnsParams& params,
                                    const SearchBounds& bounds, S& rng)
{
    const auto across = select_across_dimensions(rng, indiv.pos.size(), params.n);
    auto next = across_move(indiv, superiors, self_index, across, params.sigma, rng);
    apply_boundary(next, bounds, params.boundary);
    return next;
}

/// Overwrites the current position and promotes it to superior on strict
/// improvement. Returns true if the superior changed.
bool update_superior(Individual& indiv, std::vector<double> new_pos, double new_fitness);

/// Draws and evaluates the initial population; superiors start at the
/// initial positions. Consumes m evaluations.
PopulationState initialize(ObjectiveProblem& problem, const AnsParams& params, RngStream& rng);

/// One generation: individuals i = 0..m-1 in order, each moved, evaluated and
/// folded into R and the global best. Stops early, after a completed
/// evaluation, once max_evals is reached.
void step(PopulationState& state, ObjectiveProblem& problem, const AnsParams& params, RngStream& rng);

/// Full run: initialize, then step until max_evals or max_generations.
/// Snapshots are taken after generation k for every k in snapshot_gens
/// (0 is the initial population).
RunResult run(ObjectiveProblem& problem, const AnsParams& params, std::uint64_t seed,
              std::span<const std::uint64_t> snapshot_gens = {});

} // namespace ans::engine
