#include "ans/stats/finner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ans::stats {

FinnerMode parse_finner_mode(std::string_view text)
{
    if (text == "step_down") {
        return FinnerMode::step_down;
    }
    if (text == "paper_compat") {
        return FinnerMode::paper_compat;
    }
    throw std::invalid_argument("unknown Finner mode '" + std::string(text) + "'");
}

std::string_view to_string(FinnerMode mode)
{
    return mode == FinnerMode::step_down ? "step_down" : "paper_compat";
}

std::vector<double> finner_adjust(std::span<const double> p_values, FinnerMode mode)
{
    if (p_values.empty()) {
        throw std::invalid_argument("finner_adjust: no p-values");
    }
    for (double p : p_values) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("finner_adjust: p-value outside [0, 1]");
        }
    }
    const std::size_t k = p_values.size();
    const double kd = static_cast<double>(k);
    std::vector<double> apv(k);

    if (mode == FinnerMode::paper_compat) {
        for (std::size_t i = 0; i < k; ++i) {
            apv[i] = std::clamp(std::max(p_values[i], 1.0 - std::pow(1.0 - p_values[i], kd)), 0.0, 1.0);
        }
        return apv;
    }

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return p_values[l] < p_values[r]; });
    double running = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const double p = p_values[order[j]];
        const double adjusted = 1.0 - std::pow(1.0 - p, kd / static_cast<double>(j + 1));
        // rounding in 1 - (1 - p) can land just below p
        running = std::max({running, adjusted, p});
        apv[order[j]] = std::clamp(running, 0.0, 1.0);
    }
    return apv;
}

} // namespace ans::stats
