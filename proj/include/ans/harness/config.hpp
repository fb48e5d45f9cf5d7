#pragma once

#include "ans/baselines/de.hpp"
#include "ans/baselines/pso.hpp"
#include "ans/benchmarks/suite.hpp"
#include "ans/core/params.hpp"
#include "ans/core/problem.hpp"
#include "ans/stats/finner.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ans::harness {

enum class Algorithm { ans, pso, de };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view text);

enum class ConfigErrc { missing_file, syntax, unknown_key, invalid_value };

class ConfigError : public std::runtime_error {
public:
    ConfigError(ConfigErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ConfigErrc code() const noexcept { return code_; }

private:
    ConfigErrc code_;
};

/// Everything one experiment needs. Built by load_config / parse_config,
/// which apply the defaults below and validate the result.
struct ExperimentConfig {
    Algorithm algorithm = Algorithm::ans;
    std::string label;                     ///< report name; defaults to the algorithm name
    std::vector<FunctionId> functions;
    std::size_t dim = 0;
    std::size_t runs = 25;
    std::uint64_t max_evals = 0;           ///< 600000 for D = 100, else 300000
    std::optional<std::uint64_t> max_generations;
    std::uint64_t master_seed = 1;
    std::optional<std::uint64_t> rotation_seed;  ///< defaults to master_seed

    // ANS
    std::size_t m = 20;
    double sigma = 0.5;
    std::optional<std::size_t> n;          ///< global across-search degree override
    std::map<FunctionId, std::size_t> n_per_function;
    SuperiorMode superior_mode = SuperiorMode::live;

    // Baselines (budget and boundary fields are filled per run)
    baselines::PsoParams pso;
    baselines::DeParams de;

    std::filesystem::path output_dir = "results";
    std::vector<std::uint64_t> snapshot_gens;
    BoundaryPolicy boundary_policy = BoundaryPolicy::clamp;
    stats::FinnerMode finner_mode = stats::FinnerMode::step_down;
    double alpha = 0.05;
    std::size_t workers = 1;
    bench::F8Range f8_range = bench::F8Range::standard;
    bool write_history = false;

    Budget budget() const { return Budget{max_evals, max_generations}; }
    std::uint64_t effective_rotation_seed() const { return rotation_seed.value_or(master_seed); }

    /// n for one function: n_per_function, then n, then the published
    /// per-function default for D = 30 / 100 (the D = 30 row otherwise),
    /// capped at D.
    std::size_t across_degree(FunctionId id) const;

    AnsParams ans_params(FunctionId id) const;
    baselines::PsoParams pso_params() const;
    baselines::DeParams de_params() const;

    /// Throws ConfigError(invalid_value) on any broken invariant.
    void validate() const;
};

/// Flat "key = value" text. '#' starts a comment; lists are comma-separated;
/// n_per_function takes "f1:28, f7:1". Unknown keys, duplicate keys and keys
/// belonging to another algorithm are errors.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Keys accepted by parse_config.
const std::vector<std::string_view>& known_config_keys();

} // namespace ans::harness
