#pragma once

#include "ans/harness/config.hpp"
#include "ans/harness/results_io.hpp"
#include "ans/stats/finner.hpp"
#include "ans/stats/summary.hpp"
#include "ans/stats/wilcoxon.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ans::harness {

/// Raw results of one algorithm keyed by function.
struct AlgorithmResults {
    std::string label;
    std::map<FunctionId, std::vector<RawRow>> rows;
};

/// Throws ConfigError(invalid_value) unless every config shares functions,
/// D, runs, budget, rotation seed, boundary policy and f8 range, and labels
/// are distinct. Needs at least two configs and runs >= 2.
void check_protocol(std::span<const ExperimentConfig> configs);

struct Tally {
    std::size_t minus = 0;
    std::size_t plus = 0;
    std::size_t approx = 0;
};

struct PosthocRow {
    std::string label;
    double p_value = 1.0;   ///< signed-rank test over per-function means
    double apv = 1.0;       ///< Finner-adjusted
};

struct ComparisonReport {
    std::vector<std::string> labels;
    std::size_t reference = 0;
    std::vector<FunctionId> functions;
    /// summaries[f][a]; rank is across algorithms on function f.
    std::vector<std::vector<stats::FunctionSummary>> summaries;
    /// verdicts[f][a] of algorithm a against the reference; empty for the reference.
    std::vector<std::vector<std::optional<stats::PairwiseVerdict>>> verdicts;
    std::vector<double> mean_rank;
    std::vector<int> overall_rank;
    std::vector<Tally> tallies;        ///< per algorithm; zero for the reference
    std::vector<PosthocRow> posthoc;   ///< peers in label order
    double alpha = 0.05;
    stats::FinnerMode finner_mode = stats::FinnerMode::step_down;
};

/// Functions are those of the reference; every peer must cover them with at
/// least two runs each. Throws std::invalid_argument otherwise.
ComparisonReport build_comparison(std::span<const AlgorithmResults> results, std::size_t reference, double alpha,
                                  stats::FinnerMode finner_mode);

/// comparison_summary.csv, comparison_verdicts.csv, comparison_posthoc.csv and
/// comparison.json.
void write_comparison(const std::filesystem::path& dir, const ComparisonReport& report);

/// Reads every raw_<label>_<fid>.csv in dir, grouped by label in sorted order.
std::vector<AlgorithmResults> load_results_dir(const std::filesystem::path& dir);

/// Index of label in results, or nullopt.
std::optional<std::size_t> find_label(std::span<const AlgorithmResults> results, const std::string& label);

} // namespace ans::harness
