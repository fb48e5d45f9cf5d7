#include "ans/baselines/de.hpp"
#include "ans/baselines/pso.hpp"
#include "ans/benchmarks/suite.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace ans;
using namespace ans::baselines;
using ans::testing::ScriptedSampler;

TEST_CASE("pso_move: null coefficients freeze the particle")
{
    Particle p;
    p.x = {1.0, -2.0};
    p.v = {0.3, 0.4};
    p.pbest = {5.0, 5.0};
    PsoParams params;
    params.w = params.c1 = params.c2 = 0.0;
    RngStream rng(1);
    pso_move(p, std::vector{3.0, 3.0}, params, 0.0, rng);
    CHECK(p.v == std::vector{0.0, 0.0});
    CHECK(p.x == std::vector{1.0, -2.0});
}

TEST_CASE("pso_move: hand-evaluated velocity")
{
    Particle p;
    p.x = {0.0};
    p.v = {0.0};
    p.pbest = {2.0};
    PsoParams params;
    params.w = 0.0;
    params.c1 = params.c2 = 1.0;
    ScriptedSampler s;
    s.uniforms = {1.0, 1.0};
    pso_move(p, std::vector{4.0}, params, 0.0, s);
    CHECK(p.v == std::vector{6.0});
    CHECK(p.x == std::vector{6.0});

    Particle q;
    q.x = {0.0};
    q.v = {0.0};
    q.pbest = {2.0};
    ScriptedSampler t;
    t.uniforms = {1.0, 1.0};
    pso_move(q, std::vector{4.0}, params, 2.5, t);
    CHECK(q.v == std::vector{2.5});
}

TEST_CASE("de_trial: zero scale copies the base vector, full crossover takes the donor")
{
    const std::vector<std::vector<double>> pop{{0.0, 0.0, 0.0}, {1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}, {7.0, 8.0, 9.0},
                                               {-1.0, -1.0, -1.0}};
    DeParams params;
    params.F = 0.0;
    params.CR = 1.0;
    RngStream rng(3);
    for (int t = 0; t < 100; ++t) {
        const auto trial = de_trial(std::span<const std::vector<double>>(pop), 0, params, rng);
        CHECK(trial.donor == pop[trial.r[0]]);
        CHECK(trial.trial == trial.donor);
    }

    params.F = 0.5;
    params.CR = 0.0;
    for (int t = 0; t < 100; ++t) {
        const auto trial = de_trial(std::span<const std::vector<double>>(pop), 2, params, rng);
        int from_donor = 0;
        for (std::size_t d = 0; d < 3; ++d) {
            from_donor += trial.trial[d] != pop[2][d] ? 1 : 0;
        }
        CHECK(from_donor <= 1);
    }
}

TEST_CASE("pick_distinct: indices pairwise distinct and never the target")
{
    RngStream rng(4);
    for (int t = 0; t < 10000; ++t) {
        const std::size_t target = static_cast<std::size_t>(t % 5);
        const auto r = pick_distinct(rng, 5, target);
        std::set<std::size_t> all{r[0], r[1], r[2], target};
        REQUIRE(all.size() == 4);
    }
    CHECK_THROWS_AS(pick_distinct(rng, 3, 0), std::invalid_argument);
}

TEST_CASE("baselines: one evaluation per member per generation")
{
    auto problem = bench::make_problem(FunctionId::f7, 5);
    RngStream rng(5);

    PsoParams pso;
    auto swarm = pso_initialize(problem, pso, rng);
    CHECK(swarm.evals_used == 30);
    for (int g = 1; g <= 10; ++g) {
        pso_step(swarm, problem, pso, rng);
        REQUIRE(swarm.evals_used == 30u * (g + 1));
        for (const auto& p : swarm.particles) {
            REQUIRE(problem.bounds().contains(p.x));
            REQUIRE(p.pbest_fitness >= swarm.gbest_fitness);
        }
    }
    CHECK(problem.eval_count() == swarm.evals_used);

    problem.reset_count();
    DeParams de;
    auto pop = de_initialize(problem, de, rng);
    CHECK(pop.evals_used == 100);
    for (int g = 1; g <= 5; ++g) {
        const auto before = pop.fitness;
        de_step(pop, problem, de, rng);
        REQUIRE(pop.evals_used == 100u * (g + 1));
        for (std::size_t i = 0; i < before.size(); ++i) {
            REQUIRE(pop.fitness[i] <= before[i]);
        }
    }
    CHECK(problem.eval_count() == pop.evals_used);
}

TEST_CASE("baselines: deterministic runs within budget")
{
    PsoParams pso;
    pso.budget.max_evals = 1000;
    DeParams de;
    de.budget.max_evals = 1050;
    auto p1 = bench::make_problem(FunctionId::f1, 10);
    auto p2 = bench::make_problem(FunctionId::f1, 10);
    const auto a = run_pso(p1, pso, 9);
    const auto b = run_pso(p2, pso, 9);
    CHECK(a.best_fitness == b.best_fitness);
    CHECK(a.history == b.history);
    CHECK(a.evals_used == 1000);

    auto p3 = bench::make_problem(FunctionId::f1, 10);
    auto p4 = bench::make_problem(FunctionId::f1, 10);
    const auto c = run_de(p3, de, 9);
    const auto d = run_de(p4, de, 9);
    CHECK(c.best_fitness == d.best_fitness);
    CHECK(c.history == d.history);
    CHECK(c.evals_used == 1050);
}

TEST_CASE("baselines: parameter validation")
{
    PsoParams pso;
    pso.swarm_size = 1;
    CHECK_THROWS_AS(pso.validate(), std::invalid_argument);
    DeParams de;
    de.CR = 1.5;
    CHECK_THROWS_AS(de.validate(), std::invalid_argument);
    de = DeParams{};
    de.pop_size = 3;
    CHECK_THROWS_AS(de.validate(), std::invalid_argument);
}
