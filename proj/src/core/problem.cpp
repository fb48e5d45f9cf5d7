#include "ans/core/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ans {

std::string to_string(FunctionId id)
{
    return "f" + std::to_string(static_cast<int>(id));
}

std::optional<FunctionId> parse_function_id(std::string_view text)
{
    if (text.size() < 2 || std::tolower(static_cast<unsigned char>(text[0])) != 'f') {
        return std::nullopt;
    }
    int value = 0;
    const auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1 ||
        value > kFunctionCount) {
        return std::nullopt;
    }
    return static_cast<FunctionId>(value);
}

std::vector<FunctionId> all_function_ids()
{
    std::vector<FunctionId> ids;
    for (int i = 1; i <= kFunctionCount; ++i) {
        ids.push_back(static_cast<FunctionId>(i));
    }
    return ids;
}

bool is_rotated(FunctionId id) noexcept
{
    return static_cast<int>(id) >= 13;
}

SquareMatrix::SquareMatrix(std::size_t n, std::vector<double> row_major)
    : n_(n), data_(std::move(row_major))
{
    if (data_.size() != n * n) {
        throw std::invalid_argument("SquareMatrix: data size is not n*n");
    }
}

SquareMatrix SquareMatrix::identity(std::size_t n)
{
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

void SquareMatrix::multiply(std::span<const double> x, std::span<double> out) const
{
    for (std::size_t r = 0; r < n_; ++r) {
        const double* row = data_.data() + r * n_;
        double acc = 0.0;
        for (std::size_t c = 0; c < n_; ++c) {
            acc += row[c] * x[c];
        }
        out[r] = acc;
    }
}

void SquareMatrix::multiply_transposed(std::span<const double> x, std::span<double> out) const
{
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t r = 0; r < n_; ++r) {
        const double* row = data_.data() + r * n_;
        for (std::size_t c = 0; c < n_; ++c) {
            out[c] += row[c] * x[r];
        }
    }
}

double orthogonality_error(const SquareMatrix& m)
{
    const std::size_t n = m.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                dot += m(k, i) * m(k, j);
            }
            worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

ObjectiveProblem::ObjectiveProblem(FunctionId id, SearchBounds bounds,
                                   std::optional<SquareMatrix> rotation, BaseFunction base)
    : id_(id), bounds_(bounds), rotation_(std::move(rotation)), base_(std::move(base))
{
    if (rotation_.has_value() != is_rotated(id_)) {
        throw std::invalid_argument(to_string(id_) + (is_rotated(id_)
                                                          ? ": rotated function requires a rotation matrix"
                                                          : ": unrotated function must not carry a rotation"));
    }
    if (rotation_) {
        if (rotation_->size() != bounds_.dim()) {
            throw std::invalid_argument(to_string(id_) + ": rotation size differs from dimensionality");
        }
        if (orthogonality_error(*rotation_) > 1e-10) {
            throw std::invalid_argument(to_string(id_) + ": rotation matrix is not orthogonal");
        }
        z_.resize(bounds_.dim());
    }
    if (!base_) {
        throw std::invalid_argument(to_string(id_) + ": missing base function");
    }
}

double ObjectiveProblem::evaluate(std::span<const double> x, RngStream& rng)
{
    if (x.size() != bounds_.dim()) {
        throw std::invalid_argument(to_string(id_) + ": evaluation point has wrong dimensionality");
    }
    ++eval_count_;
    if (rotation_) {
        rotation_->multiply(x, z_);
        return base_(z_, rng);
    }
    return base_(x, rng);
}

} // namespace ans
