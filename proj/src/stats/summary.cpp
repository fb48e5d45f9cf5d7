#include "ans/stats/summary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ans::stats {

FunctionSummary summarize(std::span<const double> final_fitnesses,
                          std::span<const std::optional<std::uint64_t>> nfe)
{
    if (final_fitnesses.empty()) {
        throw std::invalid_argument("summarize: no runs");
    }
    if (final_fitnesses.size() != nfe.size()) {
        throw std::invalid_argument("summarize: fitness and NFE lists differ in length");
    }
    FunctionSummary s;
    s.runs = final_fitnesses.size();
    const double n = static_cast<double>(s.runs);

    double sum = 0.0;
    for (double v : final_fitnesses) {
        sum += v;
    }
    s.mean = sum / n;
    if (s.runs > 1) {
        // Scaled so deviations near 1e-200 do not underflow when squared.
        double scale = 0.0;
        for (double v : final_fitnesses) {
            scale = std::max(scale, std::abs(v - s.mean));
        }
        if (scale > 0.0 && std::isfinite(scale)) {
            double ss = 0.0;
            for (double v : final_fitnesses) {
                const double d = (v - s.mean) / scale;
                ss += d * d;
            }
            s.std = scale * std::sqrt(ss / (n - 1.0));
        } else if (!std::isfinite(scale)) {
            s.std = scale;
        }
    }

    double nfe_sum = 0.0;
    for (const auto& e : nfe) {
        if (e) {
            ++s.successes;
            nfe_sum += static_cast<double>(*e);
        }
    }
    s.success_rate = static_cast<double>(s.successes) / n;
    if (s.successes > 0) {
        s.mean_nfe = nfe_sum / static_cast<double>(s.successes);
    }
    return s;
}

std::vector<int> rank_algorithms(std::span<const double> means)
{
    std::vector<int> ranks(means.size());
    for (std::size_t i = 0; i < means.size(); ++i) {
        const auto better = std::count_if(means.begin(), means.end(),
                                          [&](double m) { return m < means[i]; });
        ranks[i] = static_cast<int>(better) + 1;
    }
    return ranks;
}

double median(std::span<const double> values)
{
    if (values.empty()) {
        throw std::invalid_argument("median: empty sample");
    }
    std::vector<double> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

} // namespace ans::stats
