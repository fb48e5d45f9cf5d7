#include "ans/harness/report.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ans::harness {

void check_protocol(std::span<const ExperimentConfig> configs)
{
    auto fail = [](const std::string& what) {
        throw ConfigError(ConfigErrc::invalid_value, "protocol mismatch: " + what);
    };
    if (configs.size() < 2) {
        fail("compare needs at least two configs");
    }
    const auto& ref = configs.front();
    std::set<std::string> labels;
    for (const auto& c : configs) {
        if (!labels.insert(c.label).second) {
            fail("duplicate label '" + c.label + "'");
        }
        if (c.runs < 2) {
            fail("'" + c.label + "' has fewer than two runs");
        }
        if (c.functions != ref.functions) {
            fail("'" + c.label + "' uses a different function list");
        }
        if (c.dim != ref.dim) {
            fail("'" + c.label + "' uses a different D");
        }
        if (c.runs != ref.runs) {
            fail("'" + c.label + "' uses a different run count");
        }
        if (c.max_evals != ref.max_evals || c.max_generations != ref.max_generations) {
            fail("'" + c.label + "' uses a different budget");
        }
        if (c.effective_rotation_seed() != ref.effective_rotation_seed()) {
            fail("'" + c.label + "' uses different rotation matrices");
        }
        if (c.boundary_policy != ref.boundary_policy) {
            fail("'" + c.label + "' uses a different boundary policy");
        }
        if (c.f8_range != ref.f8_range) {
            fail("'" + c.label + "' uses a different f8 range");
        }
    }
}

ComparisonReport build_comparison(std::span<const AlgorithmResults> results, std::size_t reference, double alpha,
                                  stats::FinnerMode finner_mode)
{
    if (results.size() < 2) {
        throw std::invalid_argument("comparison needs at least two algorithms");
    }
    if (reference >= results.size()) {
        throw std::invalid_argument("reference index out of range");
    }
    ComparisonReport rep;
    rep.reference = reference;
    rep.alpha = alpha;
    rep.finner_mode = finner_mode;
    for (const auto& r : results) {
        rep.labels.push_back(r.label);
    }
    for (const auto& [id, rows] : results[reference].rows) {
        rep.functions.push_back(id);
    }
    const std::size_t na = results.size();

    auto finals_of = [&](std::size_t a, FunctionId id) {
        const auto it = results[a].rows.find(id);
        if (it == results[a].rows.end() || it->second.size() < 2) {
            throw std::invalid_argument(fmt::format("'{}' lacks at least two runs on {}", results[a].label,
                                                    to_string(id)));
        }
        std::vector<double> v;
        for (const auto& row : it->second) {
            v.push_back(row.final_fitness);
        }
        return v;
    };

    rep.mean_rank.assign(na, 0.0);
    rep.tallies.assign(na, Tally{});
    for (auto id : rep.functions) {
        std::vector<stats::FunctionSummary> sums;
        std::vector<double> means;
        for (std::size_t a = 0; a < na; ++a) {
            finals_of(a, id);
            sums.push_back(summarize_rows(results[a].rows.at(id)));
            means.push_back(sums.back().mean);
        }
        const auto ranks = stats::rank_algorithms(means);
        for (std::size_t a = 0; a < na; ++a) {
            sums[a].rank = ranks[a];
            rep.mean_rank[a] += ranks[a];
        }
        const auto ref_finals = finals_of(reference, id);
        std::vector<std::optional<stats::PairwiseVerdict>> row(na);
        for (std::size_t a = 0; a < na; ++a) {
            if (a == reference) {
                continue;
            }
            const auto v = stats::wilcoxon_rank_sum(ref_finals, finals_of(a, id), alpha);
            row[a] = v;
            switch (v.symbol) {
            case stats::Verdict::minus: ++rep.tallies[a].minus; break;
            case stats::Verdict::plus: ++rep.tallies[a].plus; break;
            case stats::Verdict::approx: ++rep.tallies[a].approx; break;
            }
        }
        rep.summaries.push_back(std::move(sums));
        rep.verdicts.push_back(std::move(row));
    }
    for (auto& mr : rep.mean_rank) {
        mr /= static_cast<double>(rep.functions.size());
    }
    rep.overall_rank = stats::rank_algorithms(rep.mean_rank);

    std::vector<double> p_values;
    for (std::size_t a = 0; a < na; ++a) {
        if (a == reference) {
            continue;
        }
        std::vector<double> diffs;
        for (std::size_t f = 0; f < rep.functions.size(); ++f) {
            diffs.push_back(rep.summaries[f][a].mean - rep.summaries[f][reference].mean);
        }
        const double p = stats::wilcoxon_signed_rank(diffs);
        rep.posthoc.push_back(PosthocRow{rep.labels[a], p, p});
        p_values.push_back(p);
    }
    const auto apv = stats::finner_adjust(p_values, finner_mode);
    for (std::size_t i = 0; i < apv.size(); ++i) {
        rep.posthoc[i].apv = apv[i];
    }
    return rep;
}

void write_comparison(const std::filesystem::path& dir, const ComparisonReport& rep)
{
    const std::size_t na = rep.labels.size();

    std::string summary = "function,algorithm,mean,std,nfe,sr,rank\n";
    std::string verdicts = "function";
    for (std::size_t a = 0; a < na; ++a) {
        if (a != rep.reference) {
            verdicts += fmt::format(",{},{}_p", rep.labels[a], rep.labels[a]);
        }
    }
    verdicts += '\n';
    for (std::size_t f = 0; f < rep.functions.size(); ++f) {
        const auto fid = to_string(rep.functions[f]);
        verdicts += fid;
        for (std::size_t a = 0; a < na; ++a) {
            const auto& s = rep.summaries[f][a];
            summary += fmt::format("{},{},{},{},{},{},{}\n", fid, rep.labels[a], format_sci(s.mean),
                                   format_sci(s.std), s.mean_nfe ? format_sci(*s.mean_nfe) : std::string("---"),
                                   format_real(s.success_rate), s.rank);
            if (a != rep.reference) {
                const auto& v = *rep.verdicts[f][a];
                verdicts += fmt::format(",{},{}", stats::to_symbol(v.symbol), format_sci(v.p_value));
            }
        }
        verdicts += '\n';
    }
    std::string tallies = "-/+/~";
    for (std::size_t a = 0; a < na; ++a) {
        if (a != rep.reference) {
            const auto& t = rep.tallies[a];
            tallies += fmt::format(",{}/{}/{},", t.minus, t.plus, t.approx);
        }
    }
    verdicts += tallies + '\n';
    for (std::size_t a = 0; a < na; ++a) {
        summary += fmt::format("mean_rank,{},,,,,{}\n", rep.labels[a], format_real(rep.mean_rank[a]));
    }
    for (std::size_t a = 0; a < na; ++a) {
        summary += fmt::format("overall_rank,{},,,,,{}\n", rep.labels[a], rep.overall_rank[a]);
    }

    std::string posthoc = "algorithm,p_value,apv\n";
    for (const auto& row : rep.posthoc) {
        posthoc += fmt::format("{},{},{}\n", row.label, format_sci(row.p_value), format_sci(row.apv));
    }

    write_text(dir / "comparison_summary.csv", summary);
    write_text(dir / "comparison_verdicts.csv", verdicts);
    write_text(dir / "comparison_posthoc.csv", posthoc);

    nlohmann::json j;
    j["reference"] = rep.labels[rep.reference];
    j["alpha"] = rep.alpha;
    j["finner_mode"] = std::string(stats::to_string(rep.finner_mode));
    nlohmann::json algs = nlohmann::json::array();
    for (std::size_t a = 0; a < na; ++a) {
        nlohmann::json aj;
        aj["label"] = rep.labels[a];
        aj["mean_rank"] = rep.mean_rank[a];
        aj["overall_rank"] = rep.overall_rank[a];
        if (a != rep.reference) {
            aj["tally"] = {{"minus", rep.tallies[a].minus}, {"plus", rep.tallies[a].plus},
                           {"approx", rep.tallies[a].approx}};
        }
        algs.push_back(aj);
    }
    j["algorithms"] = algs;
    nlohmann::json funcs = nlohmann::json::array();
    for (std::size_t f = 0; f < rep.functions.size(); ++f) {
        nlohmann::json fj;
        fj["function"] = to_string(rep.functions[f]);
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t a = 0; a < na; ++a) {
            const auto& s = rep.summaries[f][a];
            nlohmann::json r;
            r["label"] = rep.labels[a];
            r["mean"] = s.mean;
            r["std"] = s.std;
            r["nfe"] = s.mean_nfe ? nlohmann::json(*s.mean_nfe) : nlohmann::json(nullptr);
            r["sr"] = s.success_rate;
            r["rank"] = s.rank;
            if (a != rep.reference) {
                r["verdict"] = std::string(stats::to_symbol(rep.verdicts[f][a]->symbol));
                r["p_value"] = rep.verdicts[f][a]->p_value;
            }
            rows.push_back(r);
        }
        fj["results"] = rows;
        funcs.push_back(fj);
    }
    j["functions"] = funcs;
    nlohmann::json ph = nlohmann::json::array();
    for (const auto& row : rep.posthoc) {
        ph.push_back({{"label", row.label}, {"p_value", row.p_value}, {"apv", row.apv}});
    }
    j["posthoc"] = ph;
    write_text(dir / "comparison.json", j.dump(2) + "\n");
}

std::vector<AlgorithmResults> load_results_dir(const std::filesystem::path& dir)
{
    if (!std::filesystem::is_directory(dir)) {
        throw std::runtime_error("'" + dir.string() + "' is not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && name.rfind("raw_", 0) == 0 && entry.path().extension() == ".csv") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::map<std::string, AlgorithmResults> by_label;
    for (const auto& path : files) {
        const auto stem = path.stem().string().substr(4);
        const auto us = stem.rfind('_');
        if (us == std::string::npos || us == 0) {
            throw std::runtime_error("cannot parse results file name '" + path.filename().string() + "'");
        }
        const auto label = stem.substr(0, us);
        const auto id = parse_function_id(stem.substr(us + 1));
        if (!id) {
            throw std::runtime_error("cannot parse function in '" + path.filename().string() + "'");
        }
        auto& ar = by_label[label];
        ar.label = label;
        ar.rows[*id] = read_raw_csv(path);
    }
    std::vector<AlgorithmResults> out;
    for (auto& [label, ar] : by_label) {
        out.push_back(std::move(ar));
    }
    return out;
}

std::optional<std::size_t> find_label(std::span<const AlgorithmResults> results, const std::string& label)
{
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].label == label) {
            return i;
        }
    }
    return std::nullopt;
}

} // namespace ans::harness
