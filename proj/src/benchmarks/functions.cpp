#include "ans/benchmarks/functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ans::bench {

namespace {

constexpr double kPi = std::numbers::pi;

double sin_sq(double v)
{
    const double s = std::sin(v);
    return s * s;
}

} // namespace

double penalty_u(double x, double a, double k, double m)
{
    if (x > a) {
        return k * std::pow(x - a, m);
    }
    if (x < -a) {
        return k * std::pow(-x - a, m);
    }
    return 0.0;
}

double sphere(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x) {
        s += v * v;
    }
    return s;
}

double rosenbrock(std::span<const double> x)
{
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i] * x[i] - x[i + 1];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double schwefel_2_21(std::span<const double> x)
{
    double m = 0.0;
    for (double v : x) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double schwefel_2_22(std::span<const double> x)
{
    double sum = 0.0;
    double prod = 1.0;
    for (double v : x) {
        sum += std::abs(v);
        prod *= std::abs(v);
    }
    return sum + prod;
}

double step(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x) {
        const double f = std::floor(v + 0.5);
        s += f * f;
    }
    return s;
}

double quartic(std::span<const double> x)
{
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double sq = x[i] * x[i];
        s += static_cast<double>(i + 1) * sq * sq;
    }
    return s;
}

double noisy_quartic(std::span<const double> x, RngStream& rng)
{
    return quartic(x) + rng.uniform01();
}

double rastrigin(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x) {
        s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
    }
    return s;
}

double noncontinuous_rastrigin(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x) {
        // std::round rounds halves away from zero.
        const double y = std::abs(v) < 0.5 ? v : 0.5 * std::round(2.0 * v);
        s += y * y - 10.0 * std::cos(2.0 * kPi * y) + 10.0;
    }
    return s;
}

double ackley(std::span<const double> x)
{
    const double n = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * kPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) + 20.0 - std::exp(cs / n) + std::numbers::e;
}

double griewank(std::span<const double> x)
{
    double sum = 0.0;
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i];
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum / 4000.0 + 1.0 - prod;
}

double penalized_1(std::span<const double> x)
{
    const std::size_t d = x.size();
    auto y = [&](std::size_t i) { return 1.0 + 0.25 * (x[i] + 1.0); };
    double inner = 10.0 * sin_sq(kPi * y(0));
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const double yi = y(i) - 1.0;
        inner += yi * yi * (1.0 + 10.0 * sin_sq(kPi * y(i + 1)));
    }
    const double yd = y(d - 1) - 1.0;
    inner += yd * yd;
    double penalty = 0.0;
    for (double v : x) {
        penalty += penalty_u(v, 10.0, 100.0, 4.0);
    }
    return kPi / static_cast<double>(d) * inner + penalty;
}

double penalized_2(std::span<const double> x)
{
    const std::size_t d = x.size();
    double inner = sin_sq(3.0 * kPi * x[0]);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const double xi = x[i] - 1.0;
        inner += xi * xi * (1.0 + sin_sq(3.0 * kPi * x[i + 1]));
    }
    // Boundary term squared so the optimum value is 0.
    const double xd = x[d - 1] - 1.0;
    inner += xd * xd * (1.0 + sin_sq(3.0 * kPi * x[d - 1]));
    double penalty = 0.0;
    for (double v : x) {
        penalty += penalty_u(v, 5.0, 100.0, 4.0);
    }
    return 0.1 * inner + penalty;
}

} // namespace ans::bench
