#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace ans::stats {

/// step_down: Finner's step-down procedure. With p sorted ascending and k
///   hypotheses, APV_(i) = max_{j <= i} 1 - (1 - p_(j))^(k / j).
/// paper_compat: APV_i = 1 - (1 - p_i)^k for every i. This is the closed form
///   that reproduces the published 1xN comparison tables, which do not follow
///   the step-down exponent beyond the first row.
enum class FinnerMode { step_down, paper_compat };

FinnerMode parse_finner_mode(std::string_view text);
std::string_view to_string(FinnerMode mode);

/// Adjusted p-values in the input order, clipped to [0, 1]. Throws
/// std::invalid_argument on an empty list or any p outside [0, 1].
std::vector<double> finner_adjust(std::span<const double> p_values,
                                  FinnerMode mode = FinnerMode::step_down);

} // namespace ans::stats
