#include "ans/harness/batch.hpp"

#include "ans/baselines/de.hpp"
#include "ans/baselines/pso.hpp"
#include "ans/benchmarks/suite.hpp"
#include "ans/core/rng.hpp"
#include "ans/engine/ans.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace ans::harness {

namespace {

std::uint64_t fnv1a(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

nlohmann::json optional_json(const std::optional<double>& v)
{
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json parameters_json(const ExperimentConfig& cfg)
{
    nlohmann::json p;
    switch (cfg.algorithm) {
    case Algorithm::ans:
        p["m"] = cfg.m;
        p["c"] = cfg.m;
        p["sigma"] = cfg.sigma;
        p["superior_mode"] = std::string(to_string(cfg.superior_mode));
        break;
    case Algorithm::pso:
        p["swarm_size"] = cfg.pso.swarm_size;
        p["w"] = cfg.pso.w;
        p["c1"] = cfg.pso.c1;
        p["c2"] = cfg.pso.c2;
        p["v_max"] = optional_json(cfg.pso.v_max);
        break;
    case Algorithm::de:
        p["pop_size"] = cfg.de.pop_size;
        p["F"] = cfg.de.F;
        p["CR"] = cfg.de.CR;
        break;
    }
    return p;
}

} // namespace

std::uint64_t derive_run_seed(std::uint64_t master_seed, Algorithm algorithm, FunctionId id, std::size_t run_index)
{
    std::uint64_t s = mix_seed(master_seed, fnv1a(to_string(algorithm)));
    s = mix_seed(s, static_cast<std::uint64_t>(id));
    return mix_seed(s, static_cast<std::uint64_t>(run_index));
}

void parallel_for(std::size_t jobs, std::size_t workers, const std::function<void(std::size_t)>& job)
{
    workers = std::max<std::size_t>(1, std::min(workers, jobs));
    if (workers == 1) {
        for (std::size_t i = 0; i < jobs; ++i) {
            job(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < jobs; i = next++) {
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error) {
                        first_error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

std::map<FunctionId, bench::RotationMatrix> prepare_rotations(const ExperimentConfig& cfg)
{
    std::map<FunctionId, bench::RotationMatrix> rotations;
    for (auto id : cfg.functions) {
        if (is_rotated(id) && !rotations.count(id)) {
            rotations.emplace(id, bench::make_rotation_matrix(
                                      cfg.dim, bench::rotation_seed(cfg.effective_rotation_seed(), id, cfg.dim)));
        }
    }
    return rotations;
}

RunResult execute_run(const ExperimentConfig& cfg, FunctionId id, const SquareMatrix* rotation, std::uint64_t seed,
                      std::span<const std::uint64_t> snapshot_gens)
{
    std::optional<SquareMatrix> m;
    if (rotation) {
        m = *rotation;
    }
    auto problem = bench::make_problem(id, cfg.dim, std::move(m), cfg.f8_range);
    switch (cfg.algorithm) {
    case Algorithm::ans: return engine::run(problem, cfg.ans_params(id), seed, snapshot_gens);
    case Algorithm::pso: return baselines::run_pso(problem, cfg.pso_params(), seed, snapshot_gens);
    case Algorithm::de: break;
    }
    return baselines::run_de(problem, cfg.de_params(), seed, snapshot_gens);
}

std::vector<RawRow> BatchResult::raw_rows(std::size_t function_index) const
{
    std::vector<RawRow> rows;
    for (const auto& rec : functions.at(function_index).runs) {
        if (rec.error) {
            continue;
        }
        rows.push_back(RawRow{rec.run_index, rec.seed, rec.result.best_fitness, rec.result.evals_to_success,
                              rec.result.evals_used});
    }
    return rows;
}

std::vector<SummaryRow> BatchResult::summary() const
{
    std::vector<SummaryRow> rows;
    for (std::size_t f = 0; f < functions.size(); ++f) {
        const auto raw = raw_rows(f);
        if (!raw.empty()) {
            rows.push_back(SummaryRow{functions[f].function, summarize_rows(raw)});
        }
    }
    return rows;
}

BatchResult execute_batch(const ExperimentConfig& cfg)
{
    cfg.validate();
    BatchResult batch;
    batch.label = cfg.label;
    batch.rotations = prepare_rotations(cfg);
    for (auto id : cfg.functions) {
        FunctionRuns fr{id, std::vector<RunRecord>(cfg.runs)};
        for (std::size_t r = 0; r < cfg.runs; ++r) {
            fr.runs[r].run_index = r;
            fr.runs[r].seed = derive_run_seed(cfg.master_seed, cfg.algorithm, id, r);
        }
        batch.functions.push_back(std::move(fr));
    }

    // Each job owns exactly one RunRecord slot, so results land in
    // (function, run_index) order whatever the scheduling.
    const std::size_t jobs = cfg.functions.size() * cfg.runs;
    parallel_for(jobs, cfg.workers, [&](std::size_t job) {
        auto& fr = batch.functions[job / cfg.runs];
        auto& rec = fr.runs[job % cfg.runs];
        const SquareMatrix* rotation = nullptr;
        if (auto it = batch.rotations.find(fr.function); it != batch.rotations.end()) {
            rotation = &it->second.matrix;
        }
        try {
            rec.result = execute_run(cfg, fr.function, rotation, rec.seed);
            if (cfg.max_evals < rec.result.evals_used) {
                rec.error = "run exceeded max_evals";
            }
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
    });
    for (const auto& fr : batch.functions) {
        batch.failures += static_cast<std::size_t>(
            std::count_if(fr.runs.begin(), fr.runs.end(), [](const RunRecord& r) { return r.error.has_value(); }));
    }
    return batch;
}

void write_batch(const ExperimentConfig& cfg, const BatchResult& batch)
{
    const auto& dir = cfg.output_dir;
    std::filesystem::create_directories(dir);

    for (const auto& [id, rot] : batch.rotations) {
        std::ostringstream text;
        bench::write_rotation(text, rot);
        write_text(dir / fmt::format("rotation_{}_D{}.txt", to_string(id), cfg.dim), text.str());
    }

    for (std::size_t f = 0; f < batch.functions.size(); ++f) {
        const auto& fr = batch.functions[f];
        write_raw_csv(raw_path(dir, cfg.label, fr.function), batch.raw_rows(f));
        if (cfg.write_history) {
            for (const auto& rec : fr.runs) {
                if (!rec.error) {
                    write_history_csv(dir / "history" /
                                          fmt::format("{}_{}_run{}.csv", cfg.label, to_string(fr.function),
                                                      rec.run_index),
                                      rec.result.history);
                }
            }
        }
    }

    const auto summary = batch.summary();
    write_summary_csv(summary_path(dir, cfg.label), summary);

    nlohmann::json report;
    report["label"] = cfg.label;
    report["algorithm"] = std::string(to_string(cfg.algorithm));
    report["D"] = cfg.dim;
    report["runs"] = cfg.runs;
    report["max_evals"] = cfg.max_evals;
    report["max_generations"] =
        cfg.max_generations ? nlohmann::json(*cfg.max_generations) : nlohmann::json(nullptr);
    report["master_seed"] = cfg.master_seed;
    report["rotation_seed"] = cfg.effective_rotation_seed();
    report["boundary_policy"] = std::string(to_string(cfg.boundary_policy));
    report["f8_range"] = std::string(bench::to_string(cfg.f8_range));
    report["parameters"] = parameters_json(cfg);
    report["failures"] = batch.failures;
    nlohmann::json functions = nlohmann::json::array();
    for (const auto& fr : batch.functions) {
        nlohmann::json fj;
        fj["function"] = to_string(fr.function);
        if (cfg.algorithm == Algorithm::ans) {
            fj["n"] = cfg.across_degree(fr.function);
        }
        const auto it = std::find_if(summary.begin(), summary.end(),
                                     [&](const SummaryRow& r) { return r.function == fr.function; });
        if (it != summary.end()) {
            const auto& s = it->summary;
            fj["mean"] = s.mean;
            fj["std"] = s.std;
            fj["nfe"] = optional_json(s.mean_nfe);
            fj["sr"] = s.success_rate;
            fj["rank"] = s.rank;
            fj["successes"] = s.successes;
        }
        nlohmann::json errors = nlohmann::json::array();
        for (const auto& rec : fr.runs) {
            if (rec.error) {
                errors.push_back({{"run_index", rec.run_index}, {"error", *rec.error}});
            }
        }
        fj["errors"] = errors;
        functions.push_back(fj);
    }
    report["functions"] = functions;
    write_text(dir / fmt::format("report_{}.json", cfg.label), report.dump(2) + "\n");
}

BatchResult run_batch(const ExperimentConfig& cfg)
{
    auto batch = execute_batch(cfg);
    write_batch(cfg, batch);
    return batch;
}

std::optional<SweepParam> parse_sweep_param(std::string_view text)
{
    if (text == "n") {
        return SweepParam::n;
    }
    if (text == "m") {
        return SweepParam::m;
    }
    if (text == "sigma") {
        return SweepParam::sigma;
    }
    return std::nullopt;
}

std::string_view to_string(SweepParam p)
{
    switch (p) {
    case SweepParam::n: return "n";
    case SweepParam::m: return "m";
    case SweepParam::sigma: break;
    }
    return "sigma";
}

namespace {

ExperimentConfig with_value(const ExperimentConfig& cfg, SweepParam param, double value)
{
    auto c = cfg;
    switch (param) {
    case SweepParam::n:
        c.n = static_cast<std::size_t>(value);
        c.n_per_function.clear();
        break;
    case SweepParam::m: c.m = static_cast<std::size_t>(value); break;
    case SweepParam::sigma: c.sigma = value; break;
    }
    return c;
}

} // namespace

void validate_sweep(const ExperimentConfig& cfg, SweepParam param, std::span<const double> values)
{
    auto fail = [&](const std::string& what) { throw ConfigError(ConfigErrc::invalid_value, what); };
    if (cfg.algorithm != Algorithm::ans) {
        fail(fmt::format("sweep parameter '{}' does not apply to algorithm '{}'", to_string(param),
                         to_string(cfg.algorithm)));
    }
    if (values.empty()) {
        fail("sweep needs at least one value");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            fail("sweep values must be finite");
        }
        if (param != SweepParam::sigma && (v < 0.0 || std::floor(v) != v)) {
            fail(fmt::format("{} = {} is not a non-negative integer", to_string(param), v));
        }
        if (param == SweepParam::n && v > static_cast<double>(cfg.dim)) {
            fail(fmt::format("n = {} exceeds D = {}", v, cfg.dim));
        }
        try {
            with_value(cfg, param, v).validate();
        } catch (const ConfigError& e) {
            fail(fmt::format("{} = {}: {}", to_string(param), v, e.what()));
        }
    }
}

std::vector<SweepCell> sweep(const ExperimentConfig& cfg, SweepParam param, std::span<const double> values)
{
    validate_sweep(cfg, param, values);
    std::vector<SweepCell> cells;
    for (double v : values) {
        const auto batch = execute_batch(with_value(cfg, param, v));
        for (std::size_t f = 0; f < batch.functions.size(); ++f) {
            SweepCell cell;
            cell.function = batch.functions[f].function;
            cell.value = v;
            const auto raw = batch.raw_rows(f);
            cell.failures = batch.functions[f].runs.size() - raw.size();
            if (!raw.empty()) {
                cell.summary = summarize_rows(raw);
            } else {
                cell.summary.mean = std::numeric_limits<double>::quiet_NaN();
            }
            cells.push_back(cell);
        }
    }
    for (auto id : cfg.functions) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& c : cells) {
            if (c.function == id && c.summary.mean < best) {
                best = c.summary.mean;
            }
        }
        for (auto& c : cells) {
            if (c.function == id) {
                c.best = c.summary.mean == best;
            }
        }
    }
    std::stable_sort(cells.begin(), cells.end(), [](const SweepCell& a, const SweepCell& b) {
        return static_cast<int>(a.function) < static_cast<int>(b.function);
    });
    return cells;
}

void write_sweep_csv(const std::filesystem::path& path, SweepParam param, std::span<const SweepCell> cells)
{
    std::string text = fmt::format("function,{},mean,std,nfe,sr,best\n", to_string(param));
    for (const auto& c : cells) {
        const auto& s = c.summary;
        text += fmt::format("{},{},{},{},{},{},{}\n", to_string(c.function), format_real(c.value),
                            format_sci(s.mean), format_sci(s.std),
                            s.mean_nfe ? format_sci(*s.mean_nfe) : std::string("---"),
                            format_real(s.success_rate), c.best ? "*" : "");
    }
    write_text(path, text);
}

std::filesystem::path snapshot_path(const std::filesystem::path& dir, const std::string& label, FunctionId id,
                                    std::uint64_t generation)
{
    return dir / fmt::format("snapshot_{}_{}_gen{}.csv", label, to_string(id), generation);
}

std::vector<TraceResult> trace(const ExperimentConfig& cfg, std::span<const std::uint64_t> gens)
{
    cfg.validate();
    if (gens.empty()) {
        throw ConfigError(ConfigErrc::invalid_value, "trace needs at least one snapshot generation");
    }
    const auto rotations = prepare_rotations(cfg);
    std::vector<TraceResult> out;
    for (auto id : cfg.functions) {
        const SquareMatrix* rotation = nullptr;
        if (auto it = rotations.find(id); it != rotations.end()) {
            rotation = &it->second.matrix;
        }
        TraceResult tr{id, execute_run(cfg, id, rotation, derive_run_seed(cfg.master_seed, cfg.algorithm, id, 0), gens),
                       {}};
        for (const auto& snap : tr.result.snapshots) {
            write_snapshot_csv(snapshot_path(cfg.output_dir, cfg.label, id, snap.generation), snap);
        }
        for (auto g : gens) {
            const bool taken = std::any_of(tr.result.snapshots.begin(), tr.result.snapshots.end(),
                                           [&](const Snapshot& s) { return s.generation == g; });
            if (!taken && std::find(tr.missing_gens.begin(), tr.missing_gens.end(), g) == tr.missing_gens.end()) {
                tr.missing_gens.push_back(g);
            }
        }
        out.push_back(std::move(tr));
    }
    return out;
}

} // namespace ans::harness
