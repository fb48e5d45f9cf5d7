#pragma once

#include "ans/core/problem.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ans::bench {

struct BenchmarkSpec {
    FunctionId id;
    std::string name;
    double lo;
    double hi;
    bool is_rotated;
    bool is_noisy;
    std::optional<FunctionId> base_id;

    SearchBounds bounds(std::size_t dim) const { return SearchBounds(lo, hi, dim); }
};

/// Which search range to use for the noncontinuous Rastrigin (f8). The
/// published table lists [-600, 600]; the Rastrigin range is the common
/// alternative.
enum class F8Range { standard, rastrigin };

F8Range parse_f8_range(std::string_view text);
std::string_view to_string(F8Range range);

/// All 18 benchmark specs, ordered f1..f18, with the published ranges.
std::vector<BenchmarkSpec> table2_defaults();

BenchmarkSpec benchmark_spec(FunctionId id, F8Range f8_range = F8Range::standard);

/// Base function body for id; for rotated ids this is the unrotated body that
/// receives z = M x.
ObjectiveProblem::BaseFunction base_function(FunctionId id);

/// Builds the problem instance. rotation must be present exactly for f13..f18.
ObjectiveProblem make_problem(FunctionId id, std::size_t dim,
                              std::optional<SquareMatrix> rotation = std::nullopt,
                              F8Range f8_range = F8Range::standard);

/// Known global minimizer in x-space. For rotated ids this is the pre-image
/// M^T z* of the base optimum.
std::vector<double> known_optimizer(FunctionId id, std::size_t dim,
                                    const SquareMatrix* rotation = nullptr);

/// Published across-search degree for D = 30 or D = 100; nullopt otherwise.
std::optional<std::size_t> default_across_degree(FunctionId id, std::size_t dim);

/// Seed of the rotation matrix for (function, D) within one experiment.
std::uint64_t rotation_seed(std::uint64_t experiment_seed, FunctionId id, std::size_t dim);

} // namespace ans::bench
