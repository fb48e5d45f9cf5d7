#include "ans/harness/batch.hpp"
#include "ans/harness/config.hpp"
#include "ans/harness/report.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace ans;
using namespace ans::harness;

constexpr int kExitOk = 0;
constexpr int kExitRunFailure = 1;
constexpr int kExitConfigError = 2;

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        auto item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) {
            out.push_back(item);
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what)
{
    std::vector<T> out;
    for (const auto& item : split_commas(text)) {
        T v{};
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size()) {
            throw ConfigError(ConfigErrc::invalid_value, fmt::format("bad {} value '{}'", what, item));
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ConfigError(ConfigErrc::invalid_value, fmt::format("{} list is empty", what));
    }
    return out;
}

struct Overrides {
    std::optional<std::size_t> workers;
    std::optional<std::string> output_dir;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--workers", workers, "Worker threads (overrides the config)")->check(CLI::PositiveNumber);
        cmd->add_option("--output-dir", output_dir, "Output directory (overrides the config)");
    }

    ExperimentConfig apply(ExperimentConfig cfg) const
    {
        if (workers) {
            cfg.workers = *workers;
        }
        if (output_dir) {
            cfg.output_dir = *output_dir;
        }
        return cfg;
    }
};

void print_summary(const std::string& label, const std::vector<SummaryRow>& rows)
{
    fmt::print("{}\n{:<5} {:>14} {:>14} {:>14} {:>6}\n", label, "fn", "mean", "std", "nfe", "sr");
    for (const auto& r : rows) {
        const auto& s = r.summary;
        fmt::print("{:<5} {:>14} {:>14} {:>14} {:>6.2f}\n", to_string(r.function), format_sci(s.mean),
                   format_sci(s.std), s.mean_nfe ? format_sci(*s.mean_nfe) : std::string("---"), s.success_rate);
    }
}

int report_failures(const BatchResult& batch)
{
    if (batch.failures == 0) {
        return kExitOk;
    }
    for (const auto& fr : batch.functions) {
        for (const auto& rec : fr.runs) {
            if (rec.error) {
                fmt::print(stderr, "error: {} {} run {}: {}\n", batch.label, to_string(fr.function), rec.run_index,
                           *rec.error);
            }
        }
    }
    return kExitRunFailure;
}

int cmd_run(const std::string& config_path, const Overrides& ov)
{
    const auto cfg = ov.apply(load_config(config_path));
    const auto batch = run_batch(cfg);
    print_summary(cfg.label, batch.summary());
    return report_failures(batch);
}

int cmd_sweep(const std::string& config_path, const Overrides& ov, const std::string& param_text,
              const std::string& values_text)
{
    const auto cfg = ov.apply(load_config(config_path));
    const auto param = parse_sweep_param(param_text);
    if (!param) {
        throw ConfigError(ConfigErrc::invalid_value, "--param must be n, m or sigma");
    }
    const auto values = parse_list<double>(values_text, "sweep");
    const auto cells = sweep(cfg, *param, values);
    const auto path = cfg.output_dir / fmt::format("sweep_{}.csv", to_string(*param));
    write_sweep_csv(path, *param, cells);
    std::size_t failures = 0;
    for (const auto& c : cells) {
        fmt::print("{:<5} {}={:<8} mean {} sr {:.2f}{}\n", to_string(c.function), to_string(*param),
                   format_real(c.value), format_sci(c.summary.mean), c.summary.success_rate, c.best ? "  *" : "");
        failures += c.failures;
    }
    fmt::print("wrote {}\n", path.string());
    return failures == 0 ? kExitOk : kExitRunFailure;
}

int cmd_trace(const std::string& config_path, const Overrides& ov, const std::string& gens_text)
{
    auto cfg = ov.apply(load_config(config_path));
    std::vector<std::uint64_t> gens = cfg.snapshot_gens;
    if (!gens_text.empty()) {
        gens = parse_list<std::uint64_t>(gens_text, "generation");
    }
    const auto results = trace(cfg, gens);
    for (const auto& tr : results) {
        fmt::print("{}: {} snapshots, {} generations, best {}\n", to_string(tr.function), tr.result.snapshots.size(),
                   tr.result.generations, format_sci(tr.result.best_fitness));
        for (auto g : tr.missing_gens) {
            fmt::print(stderr, "warning: {} terminated at generation {}; no snapshot for generation {}\n",
                       to_string(tr.function), tr.result.generations, g);
        }
    }
    return kExitOk;
}

void print_comparison(const ComparisonReport& rep)
{
    for (std::size_t a = 0; a < rep.labels.size(); ++a) {
        fmt::print("{:<12} mean rank {:.4f}  overall {}", rep.labels[a], rep.mean_rank[a], rep.overall_rank[a]);
        if (a != rep.reference) {
            const auto& t = rep.tallies[a];
            fmt::print("  -/+/~ {}/{}/{}", t.minus, t.plus, t.approx);
        }
        fmt::print("\n");
    }
    for (const auto& row : rep.posthoc) {
        fmt::print("{:<12} p {}  apv {}\n", row.label, format_sci(row.p_value), format_sci(row.apv));
    }
}

std::size_t resolve_reference(const std::vector<ExperimentConfig>& configs, const std::string& reference)
{
    for (std::size_t i = 0; i < configs.size(); ++i) {
        if (configs[i].label == reference) {
            return i;
        }
    }
    std::optional<std::size_t> match;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        if (to_string(configs[i].algorithm) == reference) {
            if (match) {
                throw ConfigError(ConfigErrc::invalid_value,
                                  "reference '" + reference + "' matches several configs; use a label");
            }
            match = i;
        }
    }
    if (!match) {
        throw ConfigError(ConfigErrc::invalid_value, "reference '" + reference + "' matches no config");
    }
    return *match;
}

int cmd_compare(const std::vector<std::string>& config_paths, const Overrides& ov, const std::string& reference)
{
    std::vector<ExperimentConfig> configs;
    for (const auto& p : config_paths) {
        configs.push_back(ov.apply(load_config(p)));
    }
    check_protocol(configs);
    const auto ref = resolve_reference(configs, reference);
    const auto out_dir = configs[ref].output_dir;

    std::vector<AlgorithmResults> results;
    int status = kExitOk;
    for (auto cfg : configs) {
        cfg.output_dir = out_dir;
        const auto batch = run_batch(cfg);
        if (report_failures(batch) != kExitOk) {
            status = kExitRunFailure;
        }
        AlgorithmResults ar{cfg.label, {}};
        for (std::size_t f = 0; f < batch.functions.size(); ++f) {
            ar.rows[batch.functions[f].function] = batch.raw_rows(f);
        }
        results.push_back(std::move(ar));
    }
    if (status != kExitOk) {
        return status;
    }
    std::ranges::sort(results, {}, &AlgorithmResults::label);
    const auto rep = build_comparison(results, *find_label(results, configs[ref].label), configs[ref].alpha, configs[ref].finner_mode);
    write_comparison(out_dir, rep);
    print_comparison(rep);
    return kExitOk;
}

int cmd_stats(const std::string& dir, const std::optional<std::string>& reference, double alpha,
              const std::string& finner_text)
{
    const auto finner_mode = stats::parse_finner_mode(finner_text);
    const auto results = load_results_dir(dir);
    if (results.empty()) {
        throw std::runtime_error("no raw result files in '" + dir + "'");
    }
    for (const auto& ar : results) {
        std::vector<SummaryRow> rows;
        for (const auto& [id, raw] : ar.rows) {
            if (!raw.empty()) {
                rows.push_back(SummaryRow{id, summarize_rows(raw)});
            }
        }
        write_summary_csv(summary_path(dir, ar.label), rows);
        print_summary(ar.label, rows);
    }
    if (reference) {
        const auto ref = find_label(results, *reference);
        if (!ref) {
            throw ConfigError(ConfigErrc::invalid_value, "no results labelled '" + *reference + "'");
        }
        const auto rep = build_comparison(results, *ref, alpha, finner_mode);
        write_comparison(dir, rep);
        print_comparison(rep);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Across neighbourhood search optimizer and benchmark harness"};
    app.require_subcommand(1);

    Overrides run_ov;
    std::string run_config;
    auto* run = app.add_subcommand("run", "Run every (function, run) pair of a config");
    run->add_option("config", run_config, "Config file")->required();
    run_ov.add_to(run);

    Overrides sweep_ov;
    std::string sweep_config;
    std::string sweep_param;
    std::string sweep_values;
    auto* sw = app.add_subcommand("sweep", "Sweep one ANS parameter over a list of values");
    sw->add_option("config", sweep_config, "Config file")->required();
    sw->add_option("--param", sweep_param, "n, m or sigma")->required();
    sw->add_option("--values", sweep_values, "Comma-separated values")->required();
    sweep_ov.add_to(sw);

    Overrides trace_ov;
    std::string trace_config;
    std::string trace_gens;
    auto* tr = app.add_subcommand("trace", "Write population snapshots of run 0");
    tr->add_option("config", trace_config, "Config file")->required();
    tr->add_option("--gens", trace_gens, "Comma-separated generations (default: snapshot_gens)");
    trace_ov.add_to(tr);

    Overrides compare_ov;
    std::vector<std::string> compare_configs;
    std::string compare_reference;
    auto* cmp = app.add_subcommand("compare", "Run several configs and compare them against a reference");
    cmp->add_option("configs", compare_configs, "Config files")->required()->expected(2, -1);
    cmp->add_option("--reference", compare_reference, "Reference label or algorithm")->required();
    compare_ov.add_to(cmp);

    std::string stats_dir;
    std::optional<std::string> stats_reference;
    double stats_alpha = 0.05;
    std::string stats_finner = "step_down";
    auto* st = app.add_subcommand("stats", "Recompute reports from raw result files");
    st->add_option("results_dir", stats_dir, "Directory holding raw_<label>_<fn>.csv files")->required();
    st->add_option("--reference", stats_reference, "Label to compare the others against");
    st->add_option("--alpha", stats_alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
    st->add_option("--finner-mode", stats_finner, "step_down or paper_compat");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (*run) {
            return cmd_run(run_config, run_ov);
        }
        if (*sw) {
            return cmd_sweep(sweep_config, sweep_ov, sweep_param, sweep_values);
        }
        if (*tr) {
            return cmd_trace(trace_config, trace_ov, trace_gens);
        }
        if (*cmp) {
            return cmd_compare(compare_configs, compare_ov, compare_reference);
        }
        return cmd_stats(stats_dir, stats_reference, stats_alpha, stats_finner);
    } catch (const ConfigError& e) {
        fmt::print(stderr, "config error: {}\n", e.what());
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        fmt::print(stderr, "config error: {}\n", e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitRunFailure;
    }
}
