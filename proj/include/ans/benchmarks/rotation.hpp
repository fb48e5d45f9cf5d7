#pragma once

#include "ans/core/problem.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>

namespace ans::bench {

struct RotationMatrix {
    SquareMatrix matrix;
    std::uint64_t seed = 0;
};

/// Random orthogonal matrix: QR of a D x D standard Gaussian matrix with the
/// column signs fixed by diag(R), so the result is Haar-distributed and a pure
/// function of (dim, seed). A numerically singular draw is redrawn from the
/// next substream, at most kMaxRotationAttempts times.
RotationMatrix make_rotation_matrix(std::size_t dim, std::uint64_t seed);

inline constexpr int kMaxRotationAttempts = 8;

double determinant(const SquareMatrix& m);

/// Plain text: header "D <dim> seed <seed>", then one row per line with
/// space-separated shortest round-trip decimals.
void write_rotation(std::ostream& out, const RotationMatrix& rotation);
RotationMatrix read_rotation(std::istream& in);

void save_rotation(const std::filesystem::path& path, const RotationMatrix& rotation);
RotationMatrix load_rotation(const std::filesystem::path& path);

} // namespace ans::bench
