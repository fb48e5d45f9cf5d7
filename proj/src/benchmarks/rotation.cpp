#include "ans/benchmarks/rotation.hpp"

#include <Eigen/Dense>

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ans::bench {

namespace {

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

SquareMatrix to_square(const Mat& m)
{
    const auto n = static_cast<std::size_t>(m.rows());
    return SquareMatrix(n, std::vector<double>(m.data(), m.data() + m.size()));
}

Mat to_eigen(const SquareMatrix& m)
{
    const auto n = static_cast<Eigen::Index>(m.size());
    return Eigen::Map<const Mat>(m.data().data(), n, n);
}

std::string format_double(double v)
{
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) {
        throw std::runtime_error("rotation: failed to format value");
    }
    return std::string(buf.data(), ptr);
}

} // namespace

RotationMatrix make_rotation_matrix(std::size_t dim, std::uint64_t seed)
{
    if (dim == 0) {
        throw std::invalid_argument("make_rotation_matrix: dimensionality must be at least 1");
    }
    const auto n = static_cast<Eigen::Index>(dim);
    const RngStream root(seed);
    for (int attempt = 0; attempt < kMaxRotationAttempts; ++attempt) {
        RngStream rng = root.split(static_cast<std::uint64_t>(attempt));
        Mat a(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
            for (Eigen::Index c = 0; c < n; ++c) {
                a(r, c) = rng.standard_normal();
            }
        }
        Eigen::HouseholderQR<Mat> qr(a);
        const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
        bool singular = false;
        Mat q = qr.householderQ();
        for (Eigen::Index j = 0; j < n; ++j) {
            const double rjj = r(j, j);
            if (std::abs(rjj) < 1e-8) {
                singular = true;
                break;
            }
            if (rjj < 0.0) {
                q.col(j) *= -1.0;
            }
        }
        if (singular) {
            continue;
        }
        SquareMatrix m = to_square(q);
        if (orthogonality_error(m) < 1e-10) {
            return RotationMatrix{std::move(m), seed};
        }
    }
    throw std::runtime_error("make_rotation_matrix: orthonormalization failed repeatedly");
}

double determinant(const SquareMatrix& m)
{
    return to_eigen(m).determinant();
}

void write_rotation(std::ostream& out, const RotationMatrix& rotation)
{
    const auto& m = rotation.matrix;
    out << "D " << m.size() << " seed " << rotation.seed << '\n';
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (c > 0) {
                out << ' ';
            }
            out << format_double(m(r, c));
        }
        out << '\n';
    }
}

RotationMatrix read_rotation(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("rotation file: missing header");
    }
    std::istringstream header(line);
    std::string d_tag;
    std::string seed_tag;
    std::size_t dim = 0;
    std::uint64_t seed = 0;
    if (!(header >> d_tag >> dim >> seed_tag >> seed) || d_tag != "D" || seed_tag != "seed" ||
        dim == 0) {
        throw std::runtime_error("rotation file: malformed header '" + line + "'");
    }
    std::vector<double> values;
    values.reserve(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        if (!std::getline(in, line)) {
            throw std::runtime_error("rotation file: expected " + std::to_string(dim) + " rows");
        }
        const char* p = line.data();
        const char* end = line.data() + line.size();
        std::size_t count = 0;
        while (p < end) {
            while (p < end && *p == ' ') {
                ++p;
            }
            if (p == end) {
                break;
            }
            double v = 0.0;
            auto [next, ec] = std::from_chars(p, end, v);
            if (ec != std::errc{}) {
                throw std::runtime_error("rotation file: bad number in row " + std::to_string(r));
            }
            values.push_back(v);
            ++count;
            p = next;
        }
        if (count != dim) {
            throw std::runtime_error("rotation file: row " + std::to_string(r) + " has " +
                                     std::to_string(count) + " entries");
        }
    }
    return RotationMatrix{SquareMatrix(dim, std::move(values)), seed};
}

void save_rotation(const std::filesystem::path& path, const RotationMatrix& rotation)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_rotation(out, rotation);
}

RotationMatrix load_rotation(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    return read_rotation(in);
}

} // namespace ans::bench
