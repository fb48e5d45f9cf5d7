#include "ans/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

namespace ans::harness {

std::string_view to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::ans: return "ans";
    case Algorithm::pso: return "pso";
    case Algorithm::de: break;
    }
    return "de";
}

std::optional<Algorithm> parse_algorithm(std::string_view text)
{
    if (text == "ans") {
        return Algorithm::ans;
    }
    if (text == "pso") {
        return Algorithm::pso;
    }
    if (text == "de") {
        return Algorithm::de;
    }
    return std::nullopt;
}

namespace {

const std::vector<std::string_view> kAnsKeys = {"m", "c", "n", "sigma", "n_per_function", "superior_mode"};
const std::vector<std::string_view> kPsoKeys = {"pso_swarm_size", "pso_w", "pso_c1", "pso_c2", "pso_v_max"};
const std::vector<std::string_view> kDeKeys = {"de_pop_size", "de_f", "de_cr"};
const std::vector<std::string_view> kCommonKeys = {
    "algorithm", "label", "functions", "D", "runs", "max_evals", "max_generations",
    "master_seed", "rotation_seed", "output_dir", "snapshot_gens", "boundary_policy",
    "finner_mode", "alpha", "workers", "f8_range", "write_history"};

bool contains(const std::vector<std::string_view>& keys, std::string_view key)
{
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s)
{
    s = trim(s);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
        s = s.substr(1, s.size() - 2);
    }
    std::vector<std::string_view> items;
    if (trim(s).empty()) {
        return items;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        items.push_back(trim(s.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return items;
}

[[noreturn]] void invalid(std::string_view key, std::string_view value, std::string_view why)
{
    throw ConfigError(ConfigErrc::invalid_value,
                      "invalid value '" + std::string(value) + "' for '" + std::string(key) + "': " +
                          std::string(why));
}

std::uint64_t to_u64(std::string_view key, std::string_view text)
{
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec == std::errc() && ptr == text.data() + text.size()) {
        return v;
    }
    // Accept integral scientific notation such as 3e5.
    double d = 0.0;
    const auto [dptr, dec] = std::from_chars(text.data(), text.data() + text.size(), d);
    if (dec == std::errc() && dptr == text.data() + text.size() && d >= 0.0 && d < 1.8e19 &&
        std::floor(d) == d) {
        return static_cast<std::uint64_t>(d);
    }
    invalid(key, text, "expected a non-negative integer");
}

double to_double(std::string_view key, std::string_view text)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
        invalid(key, text, "expected a finite number");
    }
    return v;
}

bool to_bool(std::string_view key, std::string_view text)
{
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    invalid(key, text, "expected true or false");
}

FunctionId to_function(std::string_view key, std::string_view text)
{
    const auto id = parse_function_id(text);
    if (!id) {
        invalid(key, text, "expected a function id f1..f18");
    }
    return *id;
}

template <typename Parse>
auto parse_enum(std::string_view key, std::string_view text, Parse parse)
{
    try {
        return parse(text);
    } catch (const std::invalid_argument& e) {
        invalid(key, text, e.what());
    }
}

void apply(ExperimentConfig& cfg, std::string_view key, std::string_view value, std::optional<std::size_t>& c_value)
{
    if (key == "algorithm") {
        const auto a = parse_algorithm(value);
        if (!a) {
            invalid(key, value, "expected ans, pso or de");
        }
        cfg.algorithm = *a;
    } else if (key == "label") {
        if (value.empty() || value.find_first_of("/\\ \t,") != std::string_view::npos) {
            invalid(key, value, "labels must be non-empty without spaces, commas or slashes");
        }
        cfg.label = std::string(value);
    } else if (key == "functions") {
        cfg.functions.clear();
        if (value == "all") {
            cfg.functions = all_function_ids();
        } else {
            for (auto item : split_list(value)) {
                cfg.functions.push_back(to_function(key, item));
            }
        }
    } else if (key == "D") {
        cfg.dim = static_cast<std::size_t>(to_u64(key, value));
    } else if (key == "runs") {
        cfg.runs = static_cast<std::size_t>(to_u64(key, value));
    } else if (key == "max_evals") {
        cfg.max_evals = to_u64(key, value);
    } else if (key == "max_generations") {
        cfg.max_generations = to_u64(key, value);
    } else if (key == "master_seed") {
        cfg.master_seed = to_u64(key, value);
    } else if (key == "rotation_seed") {
        cfg.rotation_seed = to_u64(key, value);
    } else if (key == "m") {
        cfg.m = static_cast<std::size_t>(to_u64(key, value));
    } else if (key == "c") {
        c_value = static_cast<std::size_t>(to_u64(key, value));
    } else if (key == "n") {
        cfg.n = static_cast<std::size_t>(to_u64(key, value));
    } else if (key == "sigma") {
        cfg.sigma = to_double(key, value);
    } else if (key == "n_per_function") {
        for (auto item : split_list(value)) {
            const auto colon = item.find(':');
            if (colon == std::string_view::npos) {
                throw ConfigError(ConfigErrc::syntax,
                                  "n_per_function entries look like f1:28, got '" + std::string(item) + "'");
            }
            const auto id = to_function(key, trim(item.substr(0, colon)));
            cfg.n_per_function[id] = static_cast<std::size_t>(to_u64(key, trim(item.substr(colon + 1))));
        }
    } else if (key == "superior_mode") {
        cfg.superior_mode = parse_enum(key, value, parse_superior_mode);
    } else if (key == "pso_swarm_size") {
        cfg.pso.swarm_size = static_cast<std::size_t>(to_u64(key, value));
    } else if (key == "pso_w") {
        cfg.pso.w = to_double(key, value);
    } else if (key == "pso_c1") {
        cfg.pso.c1 = to_double(key, value);
    } else if (key == "pso_c2") {
        cfg.pso.c2 = to_double(key, value);
    } else if (key == "pso_v_max") {
        cfg.pso.v_max = to_double(key, value);
    } else if (key == "de_pop_size") {
        cfg.de.pop_size = static_cast<std::size_t>(to_u64(key, value));
    } else if (key == "de_f") {
        cfg.de.F = to_double(key, value);
    } else if (key == "de_cr") {
        cfg.de.CR = to_double(key, value);
    } else if (key == "output_dir") {
        if (value.empty()) {
            invalid(key, value, "empty path");
        }
        cfg.output_dir = std::filesystem::path(std::string(value));
    } else if (key == "snapshot_gens") {
        cfg.snapshot_gens.clear();
        for (auto item : split_list(value)) {
            cfg.snapshot_gens.push_back(to_u64(key, item));
        }
    } else if (key == "boundary_policy") {
        cfg.boundary_policy = parse_enum(key, value, parse_boundary_policy);
    } else if (key == "finner_mode") {
        cfg.finner_mode = parse_enum(key, value, stats::parse_finner_mode);
    } else if (key == "alpha") {
        cfg.alpha = to_double(key, value);
    } else if (key == "workers") {
        cfg.workers = static_cast<std::size_t>(to_u64(key, value));
    } else if (key == "f8_range") {
        cfg.f8_range = parse_enum(key, value, bench::parse_f8_range);
    } else if (key == "write_history") {
        cfg.write_history = to_bool(key, value);
    }
}

} // namespace

const std::vector<std::string_view>& known_config_keys()
{
    static const std::vector<std::string_view> keys = [] {
        std::vector<std::string_view> all = kCommonKeys;
        all.insert(all.end(), kAnsKeys.begin(), kAnsKeys.end());
        all.insert(all.end(), kPsoKeys.begin(), kPsoKeys.end());
        all.insert(all.end(), kDeKeys.begin(), kDeKeys.end());
        return all;
    }();
    return keys;
}

std::size_t ExperimentConfig::across_degree(FunctionId id) const
{
    std::size_t value = 1;
    if (auto it = n_per_function.find(id); it != n_per_function.end()) {
        value = it->second;
    } else if (n) {
        value = *n;
    } else {
        const std::size_t table_dim = dim == 100 ? 100 : 30;
        value = bench::default_across_degree(id, table_dim).value_or(1);
    }
    return std::min(value, dim);
}

AnsParams ExperimentConfig::ans_params(FunctionId id) const
{
    AnsParams p;
    p.m = m;
    p.c = m;
    p.n = across_degree(id);
    p.sigma = sigma;
    p.budget = budget();
    p.boundary = boundary_policy;
    p.superior_mode = superior_mode;
    return p;
}

baselines::PsoParams ExperimentConfig::pso_params() const
{
    auto p = pso;
    p.budget = budget();
    p.boundary = boundary_policy;
    return p;
}

baselines::DeParams ExperimentConfig::de_params() const
{
    auto p = de;
    p.budget = budget();
    p.boundary = boundary_policy;
    return p;
}

void ExperimentConfig::validate() const
{
    auto fail = [](const std::string& what) { throw ConfigError(ConfigErrc::invalid_value, what); };
    if (functions.empty()) {
        fail("at least one function is required");
    }
    if (dim == 0) {
        fail("D must be at least 1");
    }
    if (runs == 0) {
        fail("runs must be at least 1");
    }
    if (workers == 0) {
        fail("workers must be at least 1");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        fail("alpha must lie in (0, 1)");
    }
    if (max_generations && *max_generations == 0) {
        fail("max_generations must be at least 1");
    }
    for (const auto& [id, value] : n_per_function) {
        if (value > dim) {
            fail("n_per_function " + to_string(id) + ":" + std::to_string(value) + " exceeds D");
        }
    }
    if (n && *n > dim) {
        fail("n = " + std::to_string(*n) + " exceeds D");
    }
    try {
        switch (algorithm) {
        case Algorithm::ans:
            for (auto id : functions) {
                ans_params(id).validate(dim);
            }
            break;
        case Algorithm::pso: pso_params().validate(); break;
        case Algorithm::de: de_params().validate(); break;
        }
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

ExperimentConfig parse_config(std::string_view text)
{
    std::vector<std::pair<std::string, std::string>> entries;
    std::set<std::string, std::less<>> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(ConfigErrc::syntax,
                              "line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(ConfigErrc::syntax, "line " + std::to_string(line_no) + ": missing key");
        }
        if (!contains(known_config_keys(), key)) {
            throw ConfigError(ConfigErrc::unknown_key,
                              "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
        if (!seen.insert(std::string(key)).second) {
            throw ConfigError(ConfigErrc::syntax,
                              "line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) + "'");
        }
        entries.emplace_back(key, value);
    }

    ExperimentConfig cfg;
    // algorithm first so algorithm-specific keys can be checked against it
    for (const auto& [key, value] : entries) {
        if (key == "algorithm") {
            std::optional<std::size_t> unused;
            apply(cfg, key, value, unused);
        }
    }
    std::optional<std::size_t> c_value;
    for (const auto& [key, value] : entries) {
        const bool foreign = (cfg.algorithm != Algorithm::ans && contains(kAnsKeys, key)) ||
                             (cfg.algorithm != Algorithm::pso && contains(kPsoKeys, key)) ||
                             (cfg.algorithm != Algorithm::de && contains(kDeKeys, key));
        if (foreign) {
            throw ConfigError(ConfigErrc::invalid_value, "key '" + key + "' does not apply to algorithm '" +
                                                             std::string(to_string(cfg.algorithm)) + "'");
        }
        if (key != "algorithm") {
            apply(cfg, key, value, c_value);
        }
    }

    if (!seen.count("functions")) {
        throw ConfigError(ConfigErrc::invalid_value, "missing required key 'functions'");
    }
    if (!seen.count("D")) {
        throw ConfigError(ConfigErrc::invalid_value, "missing required key 'D'");
    }
    if (c_value && *c_value != cfg.m) {
        throw ConfigError(ConfigErrc::invalid_value, "c must equal m");
    }
    if (cfg.label.empty()) {
        cfg.label = std::string(to_string(cfg.algorithm));
    }
    if (!seen.count("max_evals")) {
        cfg.max_evals = cfg.dim == 100 ? 600000 : 300000;
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(ConfigErrc::missing_file, "cannot open config file '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

} // namespace ans::harness
