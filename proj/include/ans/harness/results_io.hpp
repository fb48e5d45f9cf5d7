#pragma once

#include "ans/core/params.hpp"
#include "ans/core/problem.hpp"
#include "ans/stats/summary.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ans::harness {

/// One line of a raw results file.
struct RawRow {
    std::size_t run_index = 0;
    std::uint64_t seed = 0;
    double final_fitness = 0.0;
    std::optional<std::uint64_t> evals_to_success;
    std::uint64_t evals_used = 0;

    bool operator==(const RawRow&) const = default;
};

/// Summary table row: one function for one algorithm.
struct SummaryRow {
    FunctionId function;
    stats::FunctionSummary summary;
};

/// Shortest text that reads back to the same double.
std::string format_real(double value);
/// Fixed six-digit scientific notation used in summary tables.
std::string format_sci(double value);

std::filesystem::path raw_path(const std::filesystem::path& dir, const std::string& label, FunctionId id);
std::filesystem::path summary_path(const std::filesystem::path& dir, const std::string& label);

/// Columns: run_index,seed,final_fitness,evals_to_success,evals_used. A run
/// without success leaves evals_to_success empty.
void write_raw_csv(const std::filesystem::path& path, std::span<const RawRow> rows);
std::vector<RawRow> read_raw_csv(const std::filesystem::path& path);

/// Columns: function,mean,std,nfe,sr,rank with nfe "---" when SR = 0.
void write_summary_csv(const std::filesystem::path& path, std::span<const SummaryRow> rows);

/// Columns: evals_used,global_best_fitness.
void write_history_csv(const std::filesystem::path& path, std::span<const HistorySample> history);

/// Columns: generation,kind,index,x1..xD with kind individual or superior.
void write_snapshot_csv(const std::filesystem::path& path, const Snapshot& snapshot);

stats::FunctionSummary summarize_rows(std::span<const RawRow> rows);

/// Writes text to path, replacing any existing file. Throws std::runtime_error.
void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace ans::harness
