#pragma once

#include "ans/core/bounds.hpp"
#include "ans/core/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ans {

enum class FunctionId : int {
    f1 = 1, f2, f3, f4, f5, f6, f7, f8, f9,
    f10, f11, f12, f13, f14, f15, f16, f17, f18
};

inline constexpr int kFunctionCount = 18;

std::string to_string(FunctionId id);
/// Accepts "f1".."f18" (case-insensitive prefix); nullopt otherwise.
std::optional<FunctionId> parse_function_id(std::string_view text);
std::vector<FunctionId> all_function_ids();
bool is_rotated(FunctionId id) noexcept;

/// Dense row-major square matrix.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
    SquareMatrix(std::size_t n, std::vector<double> row_major);

    static SquareMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
    std::span<const double> data() const noexcept { return data_; }

    /// out = M * x
    void multiply(std::span<const double> x, std::span<double> out) const;
    /// out = M^T * x
    void multiply_transposed(std::span<const double> x, std::span<double> out) const;

    bool operator==(const SquareMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// max_{ij} |(M^T M - I)_{ij}|
double orthogonality_error(const SquareMatrix& m);

/// A benchmark instance owned by one run: function identity, box, optional
/// rotation and the evaluation counter.
///
/// For rotated ids evaluate() first forms z = M x and hands z to the base
/// function; the base function never sees x.
class ObjectiveProblem {
public:
    using BaseFunction = std::function<double(std::span<const double>, RngStream&)>;

    /// Throws std::invalid_argument if a rotation is supplied for an
    /// unrotated id (or missing for a rotated one), if its size differs from
    /// the bounds dimension, or if it is not orthogonal within 1e-10.
    ObjectiveProblem(FunctionId id, SearchBounds bounds, std::optional<SquareMatrix> rotation,
                     BaseFunction base);

    FunctionId id() const noexcept { return id_; }
    const SearchBounds& bounds() const noexcept { return bounds_; }
    std::size_t dim() const noexcept { return bounds_.dim(); }
    const std::optional<SquareMatrix>& rotation() const noexcept { return rotation_; }
    std::uint64_t eval_count() const noexcept { return eval_count_; }

    /// Counts one evaluation. rng feeds the additive noise of f6 only.
    double evaluate(std::span<const double> x, RngStream& rng);

    void reset_count() noexcept { eval_count_ = 0; }

private:
    FunctionId id_;
    SearchBounds bounds_;
    std::optional<SquareMatrix> rotation_;
    BaseFunction base_;
    std::vector<double> z_;
    std::uint64_t eval_count_ = 0;
};

/// Every benchmark optimum is 0, so success means strictly below this.
inline constexpr double kSuccessThreshold = 1e-5;

} // namespace ans
