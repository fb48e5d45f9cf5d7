#pragma once

#include "ans/core/bounds.hpp"
#include "ans/core/params.hpp"
#include "ans/core/problem.hpp"
#include "ans/core/rng.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace ans::baselines {

/// Global-best PSO with inertia weight. Defaults are the constriction-
/// equivalent settings (w = 0.7298, c1 = c2 = 1.49445).
struct PsoParams {
    std::size_t swarm_size = 30;
    double w = 0.7298;
    double c1 = 1.49445;
    double c2 = 1.49445;
    /// Velocity clamp per coordinate; defaults to half the range width when unset.
    std::optional<double> v_max;
    Budget budget;
    BoundaryPolicy boundary = BoundaryPolicy::clamp;

    void validate() const;
};

struct Particle {
    std::vector<double> x;
    std::vector<double> v;
    double fitness = std::numeric_limits<double>::infinity();
    std::vector<double> pbest;
    double pbest_fitness = std::numeric_limits<double>::infinity();
};

struct SwarmState {
    std::vector<Particle> particles;
    std::vector<double> gbest;
    double gbest_fitness = std::numeric_limits<double>::infinity();
    std::uint64_t generation = 0;
    std::uint64_t evals_used = 0;
    std::optional<std::uint64_t> evals_to_success;
};

/// v <- w v + c1 r1 (pbest - x) + c2 r2 (gbest - x), then x <- x + v.
/// r1 and r2 are drawn per dimension in that order. v_max <= 0 disables the
/// velocity clamp. Position boundary handling is left to the caller.
template <Sampler S>
void pso_move(Particle& p, std::span<const double> gbest, const PsoParams& params, double v_max,
              S& rng)
{
    for (std::size_t d = 0; d < p.x.size(); ++d) {
        const double r1 = rng.uniform01();
        const double r2 = rng.uniform01();
        double v = params.w * p.v[d] + params.c1 * r1 * (p.pbest[d] - p.x[d]) +
                   params.c2 * r2 * (gbest[d] - p.x[d]);
        if (v_max > 0.0) {
            v = std::clamp(v, -v_max, v_max);
        }
        p.v[d] = v;
        p.x[d] += v;
    }
}

/// Initial swarm: uniform positions, zero velocities, pbest = x.
SwarmState pso_initialize(ObjectiveProblem& problem, const PsoParams& params, RngStream& rng);

/// One generation, particles in order with gbest refreshed immediately.
void pso_step(SwarmState& state, ObjectiveProblem& problem, const PsoParams& params, RngStream& rng);

RunResult run_pso(ObjectiveProblem& problem, const PsoParams& params, std::uint64_t seed,
                  std::span<const std::uint64_t> snapshot_gens = {});

} // namespace ans::baselines
