#include "ans/core/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ans {

SearchBounds::SearchBounds(double lo, double hi, std::size_t dim) : lo_(lo), hi_(hi), dim_(dim)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw std::invalid_argument("SearchBounds: require finite lo < hi");
    }
    if (dim == 0) {
        throw std::invalid_argument("SearchBounds: dimensionality must be at least 1");
    }
}

bool SearchBounds::contains(std::span<const double> x) const
{
    return x.size() == dim_ &&
           std::all_of(x.begin(), x.end(), [this](double v) { return v >= lo_ && v <= hi_; });
}

BoundaryPolicy parse_boundary_policy(std::string_view text)
{
    if (text == "clamp") {
        return BoundaryPolicy::clamp;
    }
    if (text == "none") {
        return BoundaryPolicy::none;
    }
    throw std::invalid_argument("unknown boundary policy '" + std::string(text) + "'");
}

std::string_view to_string(BoundaryPolicy policy)
{
    return policy == BoundaryPolicy::clamp ? "clamp" : "none";
}

std::vector<double> clamp_to_bounds(std::span<const double> pos, const SearchBounds& bounds)
{
    if (pos.size() != bounds.dim()) {
        throw std::invalid_argument("clamp_to_bounds: dimensionality mismatch");
    }
    std::vector<double> out(pos.begin(), pos.end());
    apply_boundary(out, bounds, BoundaryPolicy::clamp);
    return out;
}

void apply_boundary(std::span<double> pos, const SearchBounds& bounds, BoundaryPolicy policy)
{
    if (policy == BoundaryPolicy::none) {
        return;
    }
    for (double& v : pos) {
        v = std::clamp(v, bounds.lo(), bounds.hi());
    }
}

std::vector<double> init_position(RngStream& rng, const SearchBounds& bounds)
{
    std::vector<double> x(bounds.dim());
    for (double& v : x) {
        v = rng.uniform(bounds.lo(), bounds.hi());
    }
    return x;
}

} // namespace ans
