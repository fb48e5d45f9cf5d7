#pragma once

#include "ans/core/rng.hpp"

#include <span>

// Base (unrotated) benchmark functions. Every function is a minimization
// problem with optimum value 0. Rotated variants are these same bodies applied
// to z = M x by ObjectiveProblem.
namespace ans::bench {

/// Dead-zone penalty used by the penalized functions:
/// k (x - a)^m above a, 0 on [-a, a], k (-x - a)^m below -a.
double penalty_u(double x, double a, double k, double m);

double sphere(std::span<const double> x);
/// Chained form over i = 1..D-1.
double rosenbrock(std::span<const double> x);
/// Schwefel 2.21: max_i |x_i|.
double schwefel_2_21(std::span<const double> x);
/// Schwefel 2.22: sum |x_i| + prod |x_i|.
double schwefel_2_22(std::span<const double> x);
/// sum floor(x_i + 0.5)^2 with the mathematical floor.
double step(std::span<const double> x);
/// Deterministic part of the noisy quartic, sum i * x_i^4 (1-based i).
double quartic(std::span<const double> x);
/// quartic(x) plus one rand[0,1) draw per evaluation.
double noisy_quartic(std::span<const double> x, RngStream& rng);
double rastrigin(std::span<const double> x);
/// Rastrigin on y_i = x_i if |x_i| < 0.5, else round(2 x_i) / 2.
double noncontinuous_rastrigin(std::span<const double> x);
double ackley(std::span<const double> x);
double griewank(std::span<const double> x);
double penalized_1(std::span<const double> x);
double penalized_2(std::span<const double> x);

} // namespace ans::bench
