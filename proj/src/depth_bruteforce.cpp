#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "tukey/depth.hpp"
#include "tukey/errors.hpp"

namespace tukey {

namespace {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

constexpr std::size_t kMaxOraclePoints = 200;

int sign_of(const Int& v) { return v.sign(); }

// Every finite double is m * 2^e with an integer m of at most 53 bits. Scaling
// all inputs by 2^-min(e) maps them to integers exactly.
class ExactScaler {
public:
    void observe(double v) {
        if (v == 0.0) {
            return;
        }
        int e = 0;
        std::frexp(v, &e);
        min_exponent_ = std::min(min_exponent_, e - 53);
    }

    Int convert(double v) const {
        if (v == 0.0) {
            return 0;
        }
        int e = 0;
        const double m = std::frexp(v, &e);
        const auto mantissa = static_cast<long long>(std::ldexp(m, 53));
        Int out = mantissa;
        out <<= (e - 53) - min_exponent_;
        return out;
    }

private:
    int min_exponent_ = INT_MAX;
};

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        s += a[j] * b[j];
    }
    return s;
}

IntVec cross(const IntVec& a, const IntVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; });
}

// Smallest strict one-side count over lines through the origin that contain
// none of the (nonzero, planar) points. Each generic line is an infinitesimal
// rotation of some line through a point, so it suffices to rotate every such
// line both ways: rotating counterclockwise sends the ray through r to the
// right side and the opposite ray to the left.
std::size_t generic_line_minimum(const std::vector<std::array<Int, 2>>& points) {
    if (points.empty()) {
        return 0;
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& r : points) {
        std::size_t left = 0, right = 0, same_ray = 0, opposite_ray = 0;
        for (const auto& z : points) {
            const int side = sign_of(r[0] * z[1] - r[1] * z[0]);
            if (side > 0) {
                ++left;
            } else if (side < 0) {
                ++right;
            } else if (sign_of(r[0] * z[0] + r[1] * z[1]) > 0) {
                ++same_ray;
            } else {
                ++opposite_ray;
            }
        }
        best = std::min({best, left + opposite_ray, right + same_ray, left + same_ray,
                         right + opposite_ray});
    }
    return best;
}

}  // namespace

DepthResult depth_bruteforce(const SampleMatrix& sample, std::span<const double> x) {
    const std::size_t d = sample.dim();
    if (d < 1 || d > 3) {
        throw ValidationError("brute-force depth supports d in {1, 2, 3}, got " + std::to_string(d));
    }
    if (sample.rows() > kMaxOraclePoints) {
        throw ValidationError("brute-force depth supports n <= 200, got " + std::to_string(sample.rows()));
    }
    if (x.size() != d) {
        throw ValidationError("query point has wrong dimension");
    }

    ExactScaler scaler;
    for (const double v : sample.data()) {
        scaler.observe(v);
    }
    for (const double v : x) {
        scaler.observe(v);
    }
    IntVec query(d);
    for (std::size_t j = 0; j < d; ++j) {
        query[j] = scaler.convert(x[j]);
    }
    std::size_t zeros = 0;
    std::vector<IntVec> points;
    for (std::size_t i = 0; i < sample.rows(); ++i) {
        IntVec z(d);
        for (std::size_t j = 0; j < d; ++j) {
            z[j] = scaler.convert(sample.row(i)[j]) - query[j];
        }
        if (is_zero(z)) {
            ++zeros;
        } else {
            points.push_back(std::move(z));
        }
    }

    DepthResult result;
    result.total = sample.rows();
    result.method = DepthMethod::Brute;

    if (d == 1) {
        std::size_t negative = 0;
        for (const auto& z : points) {
            negative += z[0] < 0 ? 1 : 0;
        }
        result.count = zeros + std::min(negative, points.size() - negative);
        return result;
    }

    if (d == 2) {
        std::vector<std::array<Int, 2>> planar;
        for (const auto& z : points) {
            planar.push_back({z[0], z[1]});
        }
        result.count = zeros + generic_line_minimum(planar);
        return result;
    }

    // d = 3: candidate normals u = z_i x z_j. Perturbing u keeps the strict
    // sides and leaves the in-plane points to a planar generic-line problem.
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const IntVec normal = cross(points[i], points[j]);
            if (is_zero(normal)) {
                continue;
            }
            const IntVec in_plane_axis = cross(normal, points[i]);
            std::size_t positive = 0, negative = 0;
            std::vector<std::array<Int, 2>> planar;
            for (const auto& z : points) {
                const int side = sign_of(dot(normal, z));
                if (side > 0) {
                    ++positive;
                } else if (side < 0) {
                    ++negative;
                } else {
                    planar.push_back({dot(points[i], z), dot(in_plane_axis, z)});
                }
            }
            const std::size_t in_plane = generic_line_minimum(planar);
            best = std::min({best, negative + in_plane, positive + in_plane});
        }
    }
    if (best == std::numeric_limits<std::size_t>::max()) {
        // No two translated points span a plane: everything lies on one line
        // through x, and a generic plane keeps one of the two rays.
        std::size_t same_ray = 0;
        for (const auto& z : points) {
            same_ray += sign_of(dot(points.front(), z)) > 0 ? 1 : 0;
        }
        best = points.empty() ? 0 : std::min(same_ray, points.size() - same_ray);
    }
    result.count = zeros + best;
    return result;
}

}  // namespace tukey
