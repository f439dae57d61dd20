#include "tukey/depth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tukey/errors.hpp"
#include "tukey/predicates.hpp"

namespace tukey {

std::string to_string(DepthMethod method) {
    switch (method) {
        case DepthMethod::Exact1D: return "exact-1d";
        case DepthMethod::Exact2D: return "exact-2d";
        case DepthMethod::Brute: return "brute";
        case DepthMethod::Approx: return "approx";
    }
    return "unknown";
}

std::string DepthResult::fraction() const {
    return std::to_string(count) + "/" + std::to_string(total) + " (" + format_double(value()) + ")";
}

std::size_t halfspace_count(const SampleMatrix& sample, std::span<const double> x,
                            std::span<const double> u) {
    const std::size_t d = sample.dim();
    if (x.size() != d || u.size() != d) {
        throw ValidationError("halfspace count: dimension mismatch");
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < sample.rows(); ++i) {
        const auto row = sample.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            s += u[j] * (row[j] - x[j]);
        }
        count += s <= 0.0 ? 1 : 0;
    }
    return count;
}

DepthResult depth_1d(std::span<const double> sample, double x) {
    if (sample.empty()) {
        throw ValidationError("depth needs a nonempty sample");
    }
    std::size_t below = 0;
    std::size_t above = 0;
    for (const double v : sample) {
        below += v <= x ? 1 : 0;
        above += v >= x ? 1 : 0;
    }
    DepthResult result;
    result.total = sample.size();
    result.method = DepthMethod::Exact1D;
    result.count = std::min(below, above);
    result.witness = Direction({below <= above ? 1.0 : -1.0});
    return result;
}

namespace {

using geom::Point2;

// A translated point z = X_i - x, represented through X_i itself so that
// orientation tests stay exact. `sign` is +1 when z lies in the half-open upper
// half-plane (angle in [0, pi)) and -1 otherwise; sign * z is then the
// canonical representative of the line through x and X_i.
struct SweepPoint {
    Point2 p;
    int sign;
    double angle;  // atan2 of the rounded canonical vector, in [0, pi]
};

// Angles whose keys differ by more than this are ordered by the keys alone.
// The rounded differences keep their exact signs, and each key is within a
// few ulps of the true angle, so the key order is the true order.
constexpr double kAngleSeparation = 1e-12;

Point2 unit_of(const Point2& v) {
    const double norm = std::hypot(v[0], v[1]);
    return {v[0] / norm, v[1] / norm};
}

}  // namespace

// For a line through x with direction angle g in (0, pi), let W(g) be the
// number of nonzero points strictly left of it, i.e. with angle in (g, g + pi).
// A closed halfplane bounded by a line that contains no nonzero points counts
// zeros + W or zeros + (T - W). Rotating off a line that does contain points only
// removes boundary points, so the depth is zeros + min over generic g of
// min(W, T - W). W is constant between consecutive critical lines and changes
// by (points at angle c + pi) - (points at angle c) when g passes c.
DepthResult depth_2d_exact(const SampleMatrix& sample, std::span<const double> x) {
    if (sample.dim() != 2 || x.size() != 2) {
        throw ValidationError("exact bivariate depth needs d = 2");
    }
    const Point2 origin{x[0], x[1]};
    std::vector<SweepPoint> points;
    points.reserve(sample.rows());
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < sample.rows(); ++i) {
        const auto row = sample.row(i);
        if (row[0] == origin[0] && row[1] == origin[1]) {
            ++zeros;
            continue;
        }
        const bool upper = row[1] > origin[1] || (row[1] == origin[1] && row[0] > origin[0]);
        const int sign = upper ? 1 : -1;
        const double angle = std::atan2(sign * (row[1] - origin[1]), sign * (row[0] - origin[0]));
        points.push_back({{row[0], row[1]}, sign, angle});
    }

    DepthResult result;
    result.total = sample.rows();
    result.method = DepthMethod::Exact2D;
    if (points.empty()) {
        result.count = zeros;
        result.witness = Direction({1.0, 0.0});
        return result;
    }

    // Canonical representatives all lie in [0, pi), where orientation is a
    // strict weak order on angle.
    auto canonical_orientation = [&](const SweepPoint& a, const SweepPoint& b) {
        return a.sign * b.sign * geom::orientation(origin, a.p, b.p);
    };
    std::sort(points.begin(), points.end(), [&](const SweepPoint& a, const SweepPoint& b) {
        if (std::abs(a.angle - b.angle) > kAngleSeparation) {
            return a.angle < b.angle;
        }
        return canonical_orientation(a, b) > 0;
    });

    struct Line {
        std::size_t first;  // index into points of a representative
        std::size_t up;     // points at angle c
        std::size_t down;   // points at angle c + pi
    };
    std::vector<Line> lines;
    std::size_t total_up = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (lines.empty() || canonical_orientation(points[lines.back().first], points[i]) != 0) {
            lines.push_back({i, 0, 0});
        }
        if (points[i].sign > 0) {
            ++lines.back().up;
            ++total_up;
        } else {
            ++lines.back().down;
        }
    }
    const std::size_t total = points.size();

    auto canonical_unit = [&](std::size_t line) {
        const SweepPoint& sp = points[lines[line].first];
        return unit_of({sp.sign * (sp.p[0] - origin[0]), sp.sign * (sp.p[1] - origin[1])});
    };

    // Arc 0 lies just before the first critical line; arc k (k >= 1) lies
    // between lines k-1 and k.
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::size_t best_arc = 0;
    bool best_left = true;
    std::size_t left = total_up;
    for (std::size_t arc = 0; arc < lines.size(); ++arc) {
        if (arc > 0) {
            left = left - lines[arc - 1].up + lines[arc - 1].down;
        }
        const std::size_t right = total - left;
        if (left < best) {
            best = left;
            best_arc = arc;
            best_left = true;
        }
        if (right < best) {
            best = right;
            best_arc = arc;
            best_left = false;
        }
    }
    result.count = zeros + best;

    // Witness: a line direction L inside the chosen arc. The halfplane
    // u.z <= 0 with u = (L_y, -L_x) is the left side of L.
    Point2 line_dir;
    if (lines.size() == 1) {
        const Point2 c = canonical_unit(0);
        line_dir = {c[1], -c[0]};
    } else if (best_arc == 0) {
        const Point2 first = canonical_unit(0);
        const Point2 last = canonical_unit(lines.size() - 1);
        line_dir = unit_of({first[0] - last[0], first[1] - last[1]});
    } else {
        const Point2 a = canonical_unit(best_arc - 1);
        const Point2 b = canonical_unit(best_arc);
        line_dir = unit_of({a[0] + b[0], a[1] + b[1]});
    }
    const double side = best_left ? 1.0 : -1.0;
    result.witness = Direction({side * line_dir[1], -side * line_dir[0]});
    return result;
}

}  // namespace tukey
