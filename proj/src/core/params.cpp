#include "ans/core/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ans {

SuperiorMode parse_superior_mode(std::string_view text)
{
    if (text == "live") {
        return SuperiorMode::live;
    }
    if (text == "frozen") {
        return SuperiorMode::frozen;
    }
    throw std::invalid_argument("unknown superior mode '" + std::string(text) + "'");
}

std::string_view to_string(SuperiorMode mode)
{
    return mode == SuperiorMode::live ? "live" : "frozen";
}

void AnsParams::validate(std::size_t dim) const
{
    if (m < 2) {
        throw std::invalid_argument("ANS: population size m must be at least 2");
    }
    if (c != m) {
        throw std::invalid_argument("ANS: superior cardinality c must equal m");
    }
    if (n > dim) {
        throw std::invalid_argument("ANS: across-search degree n=" + std::to_string(n) +
                                    " exceeds dimensionality " + std::to_string(dim));
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("ANS: sigma must be a positive finite number");
    }
    if (budget.max_evals < m) {
        throw std::invalid_argument("ANS: max_evals must cover the initial population");
    }
    if (budget.max_generations && *budget.max_generations == 0) {
        throw std::invalid_argument("ANS: max_generations must be positive");
    }
}

} // namespace ans
