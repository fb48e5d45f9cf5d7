#pragma once

#include "ans/core/rng.hpp"

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace ans {

/// Box-shaped search domain with the same [lo, hi] range on every dimension.
class SearchBounds {
public:
    /// Throws std::invalid_argument unless lo < hi and dim >= 1.
    SearchBounds(double lo, double hi, std::size_t dim);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    std::size_t dim() const noexcept { return dim_; }
    double width() const noexcept { return hi_ - lo_; }

    bool contains(std::span<const double> x) const;

    bool operator==(const SearchBounds&) const = default;

private:
    double lo_;
    double hi_;
    std::size_t dim_;
};

enum class BoundaryPolicy { clamp, none };

BoundaryPolicy parse_boundary_policy(std::string_view text);
std::string_view to_string(BoundaryPolicy policy);

std::vector<double> clamp_to_bounds(std::span<const double> pos, const SearchBounds& bounds);

/// In-place variant used on the hot path; honours the policy.
void apply_boundary(std::span<double> pos, const SearchBounds& bounds, BoundaryPolicy policy);

/// Each coordinate independently uniform on [lo, hi).
std::vector<double> init_position(RngStream& rng, const SearchBounds& bounds);

} // namespace ans
