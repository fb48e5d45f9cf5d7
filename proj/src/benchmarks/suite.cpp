#include "ans/benchmarks/suite.hpp"

#include "ans/benchmarks/functions.hpp"
#include "ans/core/rng.hpp"

#include <array>
#include <stdexcept>

namespace ans::bench {

namespace {

template <double (*F)(std::span<const double>)>
double deterministic(std::span<const double> x, RngStream&)
{
    return F(x);
}

struct Row {
    const char* name;
    double lo;
    double hi;
};

constexpr std::array<Row, kFunctionCount> kDefaults = {{
    {"Sphere", -500.0, 500.0},
    {"Rosenbrock", -2.048, 2.048},
    {"Schwefel 2.21", -10.0, 10.0},
    {"Schwefel 2.22", -10.0, 10.0},
    {"Step function", -100.0, 100.0},
    {"Noise Quadric", -2.048, 2.048},
    {"Rastrigin", -5.12, 5.12},
    {"Noncontinuous Rastrigin", -600.0, 600.0},
    {"Ackley", -32.0, 32.0},
    {"Griewank", -600.0, 600.0},
    {"Penalized 1", -50.0, 50.0},
    {"Penalized 2", -50.0, 50.0},
    {"Rotated Sphere", -500.0, 500.0},
    {"Rotated Rosenbrock", -2.048, 2.048},
    {"Rotated Schwefel 2.21", -10.0, 10.0},
    {"Rotated Rastrigin", -5.12, 5.12},
    {"Rotated Ackley", -32.0, 32.0},
    {"Rotated Griewank", -600.0, 600.0},
}};

// Across-search degree per function, rows D = 30 and D = 100.
constexpr std::array<std::size_t, kFunctionCount> kDegree30 = {
    28, 1, 10, 28, 1, 28, 1, 1, 28, 1, 1, 1, 28, 28, 28, 1, 28, 28};
constexpr std::array<std::size_t, kFunctionCount> kDegree100 = {
    8, 20, 8, 10, 10, 10, 1, 1, 10, 1, 1, 1, 10, 10, 8, 1, 20, 40};

std::size_t index_of(FunctionId id)
{
    return static_cast<std::size_t>(static_cast<int>(id) - 1);
}

std::optional<FunctionId> base_of(FunctionId id)
{
    switch (id) {
    case FunctionId::f13: return FunctionId::f1;
    case FunctionId::f14: return FunctionId::f2;
    case FunctionId::f15: return FunctionId::f3;
    case FunctionId::f16: return FunctionId::f7;
    case FunctionId::f17: return FunctionId::f9;
    case FunctionId::f18: return FunctionId::f10;
    default: return std::nullopt;
    }
}

} // namespace

F8Range parse_f8_range(std::string_view text)
{
    if (text == "standard") {
        return F8Range::standard;
    }
    if (text == "rastrigin") {
        return F8Range::rastrigin;
    }
    throw std::invalid_argument("unknown f8 range '" + std::string(text) + "'");
}

std::string_view to_string(F8Range range)
{
    return range == F8Range::standard ? "standard" : "rastrigin";
}

std::vector<BenchmarkSpec> table2_defaults()
{
    std::vector<BenchmarkSpec> specs;
    for (FunctionId id : all_function_ids()) {
        specs.push_back(benchmark_spec(id));
    }
    return specs;
}

BenchmarkSpec benchmark_spec(FunctionId id, F8Range f8_range)
{
    const Row& row = kDefaults.at(index_of(id));
    BenchmarkSpec spec{id, row.name, row.lo, row.hi, is_rotated(id), id == FunctionId::f6, base_of(id)};
    if (id == FunctionId::f8 && f8_range == F8Range::rastrigin) {
        spec.lo = -5.12;
        spec.hi = 5.12;
    }
    return spec;
}

ObjectiveProblem::BaseFunction base_function(FunctionId id)
{
    switch (base_of(id).value_or(id)) {
    case FunctionId::f1: return deterministic<sphere>;
    case FunctionId::f2: return deterministic<rosenbrock>;
    case FunctionId::f3: return deterministic<schwefel_2_21>;
    case FunctionId::f4: return deterministic<schwefel_2_22>;
    case FunctionId::f5: return deterministic<step>;
    case FunctionId::f6: return noisy_quartic;
    case FunctionId::f7: return deterministic<rastrigin>;
    case FunctionId::f8: return deterministic<noncontinuous_rastrigin>;
    case FunctionId::f9: return deterministic<ackley>;
    case FunctionId::f10: return deterministic<griewank>;
    case FunctionId::f11: return deterministic<penalized_1>;
    case FunctionId::f12: return deterministic<penalized_2>;
    default: break;
    }
    throw std::logic_error("base_function: unreachable id");
}

ObjectiveProblem make_problem(FunctionId id, std::size_t dim, std::optional<SquareMatrix> rotation,
                              F8Range f8_range)
{
    return ObjectiveProblem(id, benchmark_spec(id, f8_range).bounds(dim), std::move(rotation),
                            base_function(id));
}

std::vector<double> known_optimizer(FunctionId id, std::size_t dim, const SquareMatrix* rotation)
{
    double value = 0.0;
    switch (base_of(id).value_or(id)) {
    case FunctionId::f2:
    case FunctionId::f12: value = 1.0; break;
    case FunctionId::f11: value = -1.0; break;
    default: break;
    }
    std::vector<double> z(dim, value);
    if (!is_rotated(id)) {
        return z;
    }
    if (rotation == nullptr || rotation->size() != dim) {
        throw std::invalid_argument("known_optimizer: rotated function needs a matching rotation");
    }
    std::vector<double> x(dim);
    rotation->multiply_transposed(z, x);
    return x;
}

std::optional<std::size_t> default_across_degree(FunctionId id, std::size_t dim)
{
    if (dim == 30) {
        return kDegree30.at(index_of(id));
    }
    if (dim == 100) {
        return kDegree100.at(index_of(id));
    }
    return std::nullopt;
}

std::uint64_t rotation_seed(std::uint64_t experiment_seed, FunctionId id, std::size_t dim)
{
    return mix_seed(mix_seed(experiment_seed, 0x524F54ULL + static_cast<std::uint64_t>(id)), dim);
}

} // namespace ans::bench
