#pragma once

#include "ans/benchmarks/rotation.hpp"
#include "ans/core/params.hpp"
#include "ans/harness/config.hpp"
#include "ans/harness/results_io.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ans::harness {

/// Seed of one run; a pure function of its arguments.
std::uint64_t derive_run_seed(std::uint64_t master_seed, Algorithm algorithm, FunctionId id,
                              std::size_t run_index);

/// Calls job(i) for i in [0, jobs) on up to `workers` threads. Exceptions
/// escaping job are rethrown after all threads finish.
void parallel_for(std::size_t jobs, std::size_t workers, const std::function<void(std::size_t)>& job);

/// One rotation matrix per rotated function in the config, shared by all runs.
std::map<FunctionId, bench::RotationMatrix> prepare_rotations(const ExperimentConfig& cfg);

/// Single run of the configured algorithm.
RunResult execute_run(const ExperimentConfig& cfg, FunctionId id, const SquareMatrix* rotation,
                      std::uint64_t seed, std::span<const std::uint64_t> snapshot_gens = {});

struct RunRecord {
    std::size_t run_index = 0;
    std::uint64_t seed = 0;
    RunResult result;
    std::optional<std::string> error;
};

struct FunctionRuns {
    FunctionId function;
    std::vector<RunRecord> runs;   ///< ordered by run_index
};

struct BatchResult {
    std::string label;
    std::vector<FunctionRuns> functions;   ///< in config order
    std::map<FunctionId, bench::RotationMatrix> rotations;
    std::size_t failures = 0;

    std::vector<RawRow> raw_rows(std::size_t function_index) const;
    /// Summary rows over the successful runs, rank 1 everywhere.
    std::vector<SummaryRow> summary() const;
};

/// Executes runs x functions on cfg.workers threads. Failing runs are
/// recorded in RunRecord::error and counted; the batch continues.
BatchResult execute_batch(const ExperimentConfig& cfg);

/// Writes raw CSVs, the summary CSV, the JSON report, rotation matrices and,
/// when enabled, per-run history files into cfg.output_dir.
void write_batch(const ExperimentConfig& cfg, const BatchResult& batch);

BatchResult run_batch(const ExperimentConfig& cfg);

enum class SweepParam { n, m, sigma };

std::optional<SweepParam> parse_sweep_param(std::string_view text);
std::string_view to_string(SweepParam p);

struct SweepCell {
    FunctionId function;
    double value = 0.0;
    stats::FunctionSummary summary;
    bool best = false;   ///< smallest mean for this function (ties all marked)
    std::size_t failures = 0;
};

/// Throws ConfigError(invalid_value) when the parameter does not apply to the
/// configured algorithm or any value breaks an invariant.
void validate_sweep(const ExperimentConfig& cfg, SweepParam param, std::span<const double> values);

/// One batch per value with every other parameter as configured.
std::vector<SweepCell> sweep(const ExperimentConfig& cfg, SweepParam param, std::span<const double> values);

/// Columns: function,<param>,mean,std,nfe,sr,best with best "*" on the winner.
void write_sweep_csv(const std::filesystem::path& path, SweepParam param, std::span<const SweepCell> cells);

struct TraceResult {
    FunctionId function;
    RunResult result;
    std::vector<std::uint64_t> missing_gens;   ///< requested but past termination
};

/// Run 0 of every configured function with snapshots at gens. Writes
/// snapshot_<label>_<fid>_gen<k>.csv files into cfg.output_dir.
std::vector<TraceResult> trace(const ExperimentConfig& cfg, std::span<const std::uint64_t> gens);

std::filesystem::path snapshot_path(const std::filesystem::path& dir, const std::string& label, FunctionId id,
                                    std::uint64_t generation);

} // namespace ans::harness
