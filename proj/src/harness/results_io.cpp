#include "ans/harness/results_io.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ans::harness {

namespace {

constexpr std::string_view kRawHeader = "run_index,seed,final_fitness,evals_to_success,evals_used";

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

template <typename T>
T parse_number(const std::string& text, const std::filesystem::path& path)
{
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::runtime_error(path.string() + ": malformed number '" + text + "'");
    }
    return value;
}

double parse_real(const std::string& text, const std::filesystem::path& path)
{
    if (text == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    if (text == "nan") {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return parse_number<double>(text, path);
}

} // namespace

std::string format_real(double value)
{
    return fmt::format("{}", value);
}

std::string format_sci(double value)
{
    return fmt::format("{:.6e}", value);
}

std::filesystem::path raw_path(const std::filesystem::path& dir, const std::string& label, FunctionId id)
{
    return dir / ("raw_" + label + "_" + to_string(id) + ".csv");
}

std::filesystem::path summary_path(const std::filesystem::path& dir, const std::string& label)
{
    return dir / ("summary_" + label + ".csv");
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write failed for '" + path.string() + "'");
    }
}

void write_raw_csv(const std::filesystem::path& path, std::span<const RawRow> rows)
{
    std::string text(kRawHeader);
    text += '\n';
    for (const auto& r : rows) {
        text += fmt::format("{},{},{},{},{}\n", r.run_index, r.seed, format_real(r.final_fitness),
                            r.evals_to_success ? std::to_string(*r.evals_to_success) : std::string(),
                            r.evals_used);
    }
    write_text(path, text);
}

std::vector<RawRow> read_raw_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "'");
    }
    std::string line;
    if (!std::getline(in, line) || line != kRawHeader) {
        throw std::runtime_error(path.string() + ": unexpected header");
    }
    std::vector<RawRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv(line);
        if (f.size() != 5) {
            throw std::runtime_error(path.string() + ": expected 5 columns in '" + line + "'");
        }
        RawRow r;
        r.run_index = parse_number<std::size_t>(f[0], path);
        r.seed = parse_number<std::uint64_t>(f[1], path);
        r.final_fitness = parse_real(f[2], path);
        if (!f[3].empty()) {
            r.evals_to_success = parse_number<std::uint64_t>(f[3], path);
        }
        r.evals_used = parse_number<std::uint64_t>(f[4], path);
        rows.push_back(r);
    }
    return rows;
}

void write_summary_csv(const std::filesystem::path& path, std::span<const SummaryRow> rows)
{
    std::string text = "function,mean,std,nfe,sr,rank\n";
    for (const auto& row : rows) {
        const auto& s = row.summary;
        text += fmt::format("{},{},{},{},{},{}\n", to_string(row.function), format_sci(s.mean), format_sci(s.std),
                            s.mean_nfe ? format_sci(*s.mean_nfe) : std::string("---"),
                            format_real(s.success_rate), s.rank);
    }
    write_text(path, text);
}

void write_history_csv(const std::filesystem::path& path, std::span<const HistorySample> history)
{
    std::string text = "evals_used,global_best_fitness\n";
    for (const auto& h : history) {
        text += fmt::format("{},{}\n", h.evals_used, format_real(h.best_fitness));
    }
    write_text(path, text);
}

void write_snapshot_csv(const std::filesystem::path& path, const Snapshot& snapshot)
{
    std::size_t dim = 0;
    if (!snapshot.positions.empty()) {
        dim = snapshot.positions.front().size();
    }
    std::string text = "generation,kind,index";
    for (std::size_t d = 1; d <= dim; ++d) {
        text += fmt::format(",x{}", d);
    }
    text += '\n';
    auto emit = [&](std::string_view kind, const std::vector<std::vector<double>>& rows) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            text += fmt::format("{},{},{}", snapshot.generation, kind, i);
            for (double x : rows[i]) {
                text += ',';
                text += format_real(x);
            }
            text += '\n';
        }
    };
    emit("individual", snapshot.positions);
    emit("superior", snapshot.superiors);
    write_text(path, text);
}

stats::FunctionSummary summarize_rows(std::span<const RawRow> rows)
{
    std::vector<double> finals;
    std::vector<std::optional<std::uint64_t>> nfe;
    finals.reserve(rows.size());
    nfe.reserve(rows.size());
    for (const auto& r : rows) {
        finals.push_back(r.final_fitness);
        nfe.push_back(r.evals_to_success);
    }
    return stats::summarize(finals, nfe);
}

} // namespace ans::harness
